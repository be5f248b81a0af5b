// Command-line front end.
//
// Exit codes: 0 success, 1 verdict false, 2 invalid input, 3 internal
// inconsistency (a result contradicting a proven statement).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "womega/algebra.hpp"
#include "womega/equiv.hpp"
#include "womega/errors.hpp"
#include "womega/instruction.hpp"
#include "womega/json_io.hpp"
#include "womega/padding.hpp"
#include "womega/pasting.hpp"
#include "womega/strict.hpp"
#include "womega/syntax.hpp"
#include "womega/testing/categories.hpp"
#include "womega/testing/generators.hpp"
#include "womega/testing/rng.hpp"
#include "womega/testing/suites.hpp"

namespace {

using namespace womega;
using womega::testing::Rng;

enum Exit { ok = 0, verdict_false = 1, invalid = 2, inconsistent = 3 };

constexpr std::uint64_t kDefaultSeed = 42;

std::uint64_t seed_or_default(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("OMEGA_SEED")) {
    try {
      std::size_t used = 0;
      const auto s = std::stoull(env, &used);
      if (used == std::string(env).size()) return s;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("OMEGA_SEED is not a natural number: '") + env + "'");
  }
  return kDefaultSeed;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::shared_ptr<const StrictCatTable> read_table(const std::string& path) {
  return std::make_shared<const StrictCatTable>(load_table(read_json(path)));
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

Side parse_side(const std::string& s) {
  if (s == "s") return Side::source;
  if (s == "t") return Side::target;
  throw ValidationError("side must be 's' or 't', got '" + s + "'");
}

json free_cell(const FreeWeakCell& c, const GlobularSet& g) {
  return {{"instruction", to_string(c.instr)}, {"diagram", to_string(c.diagram, g)}};
}

json instr_list(const std::vector<Instruction>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

json tower_json(const PadInstructions& P) {
  return {{"n", P.n},
          {"phi", to_string(P.phi)},
          {"chi", to_string(P.chi)},
          {"phi_tower", instr_list(P.phi_tower)},
          {"lambda", instr_list(P.lambda)},
          {"rho", instr_list(P.rho)}};
}

template <class X, class F>
json sequence_json(const PadSequence<X>& s, F&& cell) {
  json ell = json::array(), r = json::array(), w = json::array();
  for (const auto& c : s.ell) ell.push_back(cell(c));
  for (const auto& c : s.r) r.push_back(cell(c));
  for (const auto& c : s.w) w.push_back(cell(c));
  return {{"ell", ell}, {"r", r}, {"w", w}, {"result", cell(s.result())}};
}

// Without a workspace: the free weak ω-category on the generic diagram of a
// random arity k -> k, with w = xi(dot phi, ww) for dot phi = kappa(phi, phi).
int pad_free(const Instruction& phi, const Instruction& chi, std::uint64_t seed) {
  Rng rng(seed);
  const PadInstructions P = pad_instructions(phi, chi);
  const PastingScheme kd = testing::random_extension(rng, P.phi.arity());
  const testing::GenericDiagram G = testing::generic_diagram(kd);
  const FreeWeak F(G.cells);
  const auto ww = F.generator_diagram(G.diagram);
  const PadNaturality<FreeWeak> nat =
      pad_naturality(F, P.phi, P.chi, contract(P.phi, P.phi, kd), contract(P.chi, P.chi, kd), ww);
  const auto cell = [&](const FreeWeakCell& c) { return free_cell(c, F.generators()); };
  print({{"instructions", tower_json(P)},
         {"seed", seed},
         {"generators", to_json(F.generators())},
         {"ww", to_string(G.diagram, F.generators())},
         {"dot_phi", instr_list(nat.dot_phi)},
         {"sequence", sequence_json(nat.padding, cell)},
         {"chi_dot_w", cell(nat.chi_dot_w)},
         {"witness", cell(nat.witness)}});
  return ok;
}

int pad_table(const Instruction& phi, const Instruction& chi, const StrictCatTable& t, const std::string& u_text,
              const std::string& v_text, const std::string& w_name) {
  const auto u = parse_cell_diagram(u_text, t);
  const auto v = parse_cell_diagram(v_text, t);
  const auto w = resolve_cell(t, w_name);
  if (!w) throw ValidationError("unknown cell '" + w_name + "'");
  const auto P = pad_instructions(phi, chi);
  const auto s = pad(t, P, u, v, *w);
  print({{"instructions", tower_json(P)}, {"sequence", sequence_json(s, [&](CellRef c) { return t.name(c); })}});
  return ok;
}

int boundary_command(const std::string& obj, int l, Side side, const std::string& in) {
  if (!in.empty()) {
    const auto t = read_table(in);
    if (!obj.empty() && obj.front() == '[') {
      std::cout << to_string(diagram_boundary(parse_cell_diagram(obj, *t), l, side), *t) << "\n";
    } else {
      const auto c = resolve_cell(*t, obj);
      if (!c) throw ValidationError("unknown cell '" + obj + "'");
      std::cout << t->name(t->boundary(*c, l, side)) << "\n";
    }
    return ok;
  }
  if (!obj.empty() && obj.front() == '(') {
    std::cout << to_string(instr_boundary(normalize(parse_term(obj)), l, side)) << "\n";
    return ok;
  }
  // A scheme, or a diagram of terms.
  try {
    std::cout << to_string(scheme_boundary(parse_scheme(obj), l, side)) << "\n";
  } catch (const SyntaxError&) {
    const auto d = map_diagram(parse_term_diagram(obj), [](const Instruction& x) { return normalize(x); });
    std::cout << to_string(diagram_boundary(d, l, side)) << "\n";
  }
  return ok;
}

int equiv_command(const std::string& path, const std::optional<int>& n) {
  const StrictFunctor f = functor_from_json(read_json(path));
  const InvertibleSet X(f.source_ptr()), Y(f.target_ptr());
  if (n) {
    if (*n < 0) throw ValidationError("--n must be a natural number");
    const Verdict s = ess_surjective(f, *n, X, Y), i = ess_injective(f, *n, X, Y);
    print({{"n", *n}, {"ess_surjective", to_json(s)}, {"ess_injective", to_json(i)}});
    return s.holds ? ok : verdict_false;
  }
  const EquivReport r = equiv_report(f, X, Y);
  print(to_json(r));
  return r.weak_equivalence ? ok : verdict_false;
}

int harness_result(const HarnessReport& h) {
  print(to_json(h));
  return h.consistent() ? ok : inconsistent;
}

// Small tables and functors for trying the commands out.
json example(const std::string& name) {
  using namespace womega::testing;
  const auto pt = share(to_table(point_category()));
  const auto arrow = share(to_table(walking_arrow()));
  const auto iso = share(to_table(walking_iso()));
  if (name == "point") return to_json(*pt);
  if (name == "arrow") return to_json(*arrow);
  if (name == "iso") return to_json(*iso);
  if (name == "z3") return to_json(suspended_cyclic(3));
  if (name == "codiscrete-arrow") return to_json(codiscrete(walking_arrow()));
  if (name == "point-to-iso") return to_json(constant_map(pt, iso, {0, 0}));
  if (name == "iso-to-point") return to_json(constant_map(iso, pt, {0, 0}));
  if (name == "point-to-arrow") return to_json(constant_map(pt, arrow, {0, 0}));
  if (name == "arrow-to-point") return to_json(constant_map(arrow, pt, {0, 0}));
  if (name == "iso-to-arrow") return to_json(constant_map(iso, arrow, {0, 0}));
  throw ValidationError("unknown example '" + name + "'");
}

const char* kExamples =
    "point, arrow, iso, z3, codiscrete-arrow, point-to-iso, iso-to-point, point-to-arrow, arrow-to-point, iso-to-arrow";

int selftest(std::uint64_t seed, int only) {
  bool all = true;
  std::cout << "selftest seed " << seed << "\n";
  for (const auto& s : testing::all_suites()) {
    if (only && s.id != only) continue;
    const auto r = testing::run_suite(s, seed);
    std::cout << testing::format_report(r) << std::flush;
    all = all && r.pass;
  }
  std::cout << (all ? "all suites passed" : "some suites failed") << "\n";
  return all ? ok : inconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak omega-category calculator: pasting schemes, instructions, padding and equivalences."};
  app.require_subcommand(1);
  int code = ok;

  std::string term, obj, scheme_text, side_text, in, path, phi_text, chi_text, u_text, v_text, w_text, example_name;
  std::vector<std::string> paths;
  int level = 0, only = 0;
  std::optional<int> equiv_n;
  std::optional<std::uint64_t> seed;

  auto* c_norm = app.add_subcommand("normalize", "Print the normal form of a term");
  c_norm->add_option("term", term, "Instruction term")->required();
  c_norm->callback([&] { std::cout << to_string(normalize(parse_term(term))) << "\n"; });

  auto* c_arity = app.add_subcommand("arity", "Print the arity of a term");
  c_arity->add_option("term", term, "Instruction term")->required();
  c_arity->callback([&] { std::cout << to_string(parse_term(term).arity()) << "\n"; });

  auto* c_bound = app.add_subcommand("boundary", "Print the l-source or l-target of a scheme, term, diagram or cell");
  c_bound->add_option("obj", obj, "Scheme, term, term diagram; or cell / cell diagram with --in")->required();
  c_bound->add_option("level", level, "Boundary level l")->required()->check(CLI::NonNegativeNumber);
  c_bound->add_option("side", side_text, "s or t")->required();
  c_bound->add_option("--in", in, "Strict table (JSON) the cells live in");
  c_bound->callback([&] { code = boundary_command(obj, level, parse_side(side_text), in); });

  auto* c_sp = app.add_subcommand("sp", "Print the standard pasting instruction of a scheme");
  c_sp->add_option("scheme", scheme_text, "Pasting scheme")->required();
  c_sp->callback([&] { std::cout << to_string(sp(parse_scheme(scheme_text))) << "\n"; });

  auto* c_pad = app.add_subcommand("pad", "Pad a cell xi(phi,u) -> xi(phi,v) to xi(chi,u) -> xi(chi,v)");
  c_pad->add_option("--phi", phi_text, "Instruction phi")->required();
  c_pad->add_option("--chi", chi_text, "Instruction chi, of the arity of phi")->required();
  auto* o_in = c_pad->add_option("--in", in, "Strict table (JSON); default: a free realization");
  c_pad->add_option("--u", u_text, "Source diagram (with --in)")->needs(o_in);
  c_pad->add_option("--v", v_text, "Target diagram (with --in)")->needs(o_in);
  c_pad->add_option("--w", w_text, "Cell xi(phi,u) -> xi(phi,v) (with --in)")->needs(o_in);
  c_pad->add_option("--seed", seed, "Seed for the free realization (default 42, or OMEGA_SEED)");
  c_pad->callback([&] {
    const Instruction phi = parse_term(phi_text), chi = parse_term(chi_text);
    if (in.empty()) {
      code = pad_free(phi, chi, seed_or_default(seed));
      return;
    }
    if (u_text.empty() || v_text.empty() || w_text.empty()) throw ValidationError("pad --in needs --u, --v and --w");
    code = pad_table(phi, chi, *read_table(in), u_text, v_text, w_text);
  });

  auto* c_inv = app.add_subcommand("invertible", "List the invertible cells of a strict table with witnesses");
  c_inv->add_option("category", path, "Strict table (JSON)")->required();
  c_inv->callback([&] { print(to_json(InvertibleSet(read_table(path)))); });

  auto* c_equiv = app.add_subcommand("equiv", "Decide whether a strict functor is a weak equivalence");
  c_equiv->add_option("functor", path, "Functor (JSON)")->required();
  c_equiv->add_option("--n", equiv_n, "Check essential n-surjectivity and n-injectivity only");
  c_equiv->callback([&] { code = equiv_command(path, equiv_n); });

  auto* c_23 = app.add_subcommand("two-of-three", "Check the 2-out-of-3 implications for f then g");
  c_23->add_option("maps", paths, "Functors f g (JSON)")->required()->expected(2);
  c_23->callback([&] {
    code = harness_result(two_of_three(functor_from_json(read_json(paths[0])), functor_from_json(read_json(paths[1]))));
  });

  auto* c_26 = app.add_subcommand("two-of-six", "Check the 2-out-of-6 implication for f, g, h");
  c_26->add_option("maps", paths, "Functors f g h (JSON)")->required()->expected(3);
  c_26->callback([&] {
    code = harness_result(two_of_six(functor_from_json(read_json(paths[0])), functor_from_json(read_json(paths[1])),
                                     functor_from_json(read_json(paths[2]))));
  });

  auto* c_self = app.add_subcommand("selftest", "Run the invariant suites");
  c_self->add_option("--seed", seed, "Seed (default 42, or OMEGA_SEED)");
  c_self->add_option("--only", only, "Run a single suite (1-9)")->check(CLI::Range(1, 9));
  c_self->callback([&] { code = selftest(seed_or_default(seed), only); });

  auto* c_ex = app.add_subcommand("example", std::string("Print an example table or functor as JSON: ") + kExamples);
  c_ex->add_option("name", example_name, "Example name")->required();
  c_ex->callback([&] { print(example(example_name)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return invalid;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return inconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  }
  return code;
}
