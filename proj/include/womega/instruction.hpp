#pragma once

// Pasting instructions: cells of L1 as terms.
//
//   Unit(n)            the unit cell e_n
//   Contract(s, t, k)  a contraction cell of arity k, from s to t
//   Compose(h, args)   the operadic composite of h with an L1-diagram
//
// Terms are immutable and shared. Equality is structural; on normal forms it
// is equality in L1.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "womega/errors.hpp"
#include "womega/pasting.hpp"
#include "womega/tree.hpp"

namespace womega {

class Instruction {
 public:
  enum class Kind : std::uint8_t { unit, contract, compose };

  Instruction();

  static Instruction unit(int n);
  // Raw constructors: no parallelism checks (see contract() / compose_instr()).
  static Instruction make_contract(Instruction src, Instruction tgt, PastingScheme k);
  static Instruction make_compose(Instruction head, PastingDiagram<Instruction> args);

  Kind kind() const;
  int dim() const;
  const PastingScheme& arity() const;
  bool is_normal() const;
  std::size_t hash() const;
  std::size_t size() const;

  const Instruction& src() const;
  const Instruction& tgt() const;
  const PastingScheme& scheme() const;
  const Instruction& head() const;
  const PastingDiagram<Instruction>& args() const;

  bool operator==(const Instruction& o) const;

 private:
  struct Node;
  explicit Instruction(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

struct Instruction::Node {
  Kind kind;
  int dim;
  PastingScheme arity;
  bool normal;
  std::size_t hash;
  std::size_t size;
  std::optional<Instruction> a, b;  // contract: src, tgt; compose: head in a
  PastingScheme k;
  PastingDiagram<Instruction> args;
};

namespace detail {

inline std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

inline std::size_t hash_shape(const Shape& t) {
  std::size_t h = t.children.size();
  for (const auto& c : t.children) h = mix(h, hash_shape(c));
  return mix(h, 0x51);
}

inline std::size_t hash_args(const Tree<Instruction>& t) {
  std::size_t h = t.children.size();
  for (const auto& x : t.labels) h = mix(h, x.hash());
  for (const auto& c : t.children) h = mix(h, hash_args(c));
  return h;
}

inline bool all_units(const Tree<Instruction>& t) {
  return all_labels(t, [](const Instruction& x, int h) { return x.kind() == Instruction::Kind::unit && x.dim() == h; });
}

}  // namespace detail

inline Instruction Instruction::unit(int n) {
  if (n < 0) throw DimensionError("unit of negative dimension");
  auto p = std::make_shared<Node>();
  p->kind = Kind::unit;
  p->dim = n;
  p->arity = globe_scheme(n, n);
  p->normal = true;
  p->hash = detail::mix(0x17, static_cast<std::size_t>(n));
  p->size = 1;
  p->k = p->arity;
  return Instruction(std::shared_ptr<const Node>(std::move(p)));
}

inline Instruction Instruction::make_contract(Instruction src, Instruction tgt, PastingScheme k) {
  if (k.dim < 1) throw DimensionError("contraction needs a scheme of dimension at least 1");
  if (src.dim() != k.dim - 1 || tgt.dim() != k.dim - 1)
    throw DimensionError("contraction: boundary instructions must have dimension " + std::to_string(k.dim - 1));
  auto p = std::make_shared<Node>();
  p->kind = Kind::contract;
  p->dim = k.dim;
  p->arity = k;
  p->normal = src.is_normal() && tgt.is_normal();
  p->hash = detail::mix(detail::mix(detail::mix(0x2b, src.hash()), tgt.hash()),
                        detail::mix(detail::hash_shape(k.tree), static_cast<std::size_t>(k.dim)));
  p->size = 1 + src.size() + tgt.size();
  p->a = std::move(src);
  p->b = std::move(tgt);
  p->k = std::move(k);
  return Instruction(std::shared_ptr<const Node>(std::move(p)));
}

inline Instruction Instruction::make_compose(Instruction head, PastingDiagram<Instruction> args) {
  if (args.dim != head.dim() || !(args.shape() == head.arity()))
    throw ValidationError("compose: argument shape " + to_string(args.shape()) + " differs from head arity " +
                          to_string(head.arity()));
  if (!all_labels(args.tree, [](const Instruction& x, int h) { return x.dim() == h; }))
    throw DimensionError("compose: an argument has the wrong dimension for its position");
  auto p = std::make_shared<Node>();
  p->kind = Kind::compose;
  p->dim = head.dim();
  p->arity = {flatten_tree(map_tree(args.tree, [](const Instruction& x, int) { return x.arity().tree; })), head.dim()};
  std::size_t size = 1 + head.size();
  bool labels_normal = true;
  for_each_label(args.tree, [&](const Instruction& x, int) {
    size += x.size();
    labels_normal = labels_normal && x.is_normal();
  });
  p->normal = head.kind() == Kind::contract && head.is_normal() && labels_normal && !detail::all_units(args.tree);
  p->hash = detail::mix(detail::mix(0x3d, head.hash()), detail::hash_args(args.tree));
  p->size = size;
  p->a = std::move(head);
  p->args = std::move(args);
  return Instruction(std::shared_ptr<const Node>(std::move(p)));
}

inline Instruction::Instruction() {
  static const Instruction e0 = unit(0);
  p_ = e0.p_;
}

inline Instruction::Kind Instruction::kind() const { return p_->kind; }
inline int Instruction::dim() const { return p_->dim; }
inline const PastingScheme& Instruction::arity() const { return p_->arity; }
inline bool Instruction::is_normal() const { return p_->normal; }
inline std::size_t Instruction::hash() const { return p_->hash; }
inline std::size_t Instruction::size() const { return p_->size; }

inline const Instruction& Instruction::src() const {
  if (kind() != Kind::contract) throw ValidationError("src() on a non-contraction");
  return *p_->a;
}
inline const Instruction& Instruction::tgt() const {
  if (kind() != Kind::contract) throw ValidationError("tgt() on a non-contraction");
  return *p_->b;
}
inline const PastingScheme& Instruction::scheme() const { return p_->k; }
inline const Instruction& Instruction::head() const {
  if (kind() != Kind::compose) throw ValidationError("head() on a non-composite");
  return *p_->a;
}
inline const PastingDiagram<Instruction>& Instruction::args() const {
  if (kind() != Kind::compose) throw ValidationError("args() on a non-composite");
  return p_->args;
}

inline bool Instruction::operator==(const Instruction& o) const {
  if (p_ == o.p_) return true;
  if (p_->hash != o.p_->hash || p_->kind != o.p_->kind || p_->dim != o.p_->dim || p_->size != o.p_->size) return false;
  switch (p_->kind) {
    case Kind::unit:
      return true;
    case Kind::contract:
      return p_->k == o.p_->k && *p_->a == *o.p_->a && *p_->b == *o.p_->b;
    case Kind::compose:
      return *p_->a == *o.p_->a && p_->args == o.p_->args;
  }
  return false;
}

inline const PastingScheme& arity(const Instruction& phi) { return phi.arity(); }

template <class L, class F>
std::string diagram_literal(const PastingDiagram<L>& u, F&& show) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : u.entries()) {
    s += (first ? "" : " ") + show(x);
    first = false;
  }
  const auto js = u.joints();
  if (!js.empty()) {
    s += " /";
    for (const auto& x : js) s += " " + show(x);
  }
  return s + "]@" + std::to_string(u.dim);
}

inline std::string to_string(const Instruction& phi) {
  switch (phi.kind()) {
    case Instruction::Kind::unit:
      return "(e " + std::to_string(phi.dim()) + ")";
    case Instruction::Kind::contract:
      return "(kappa " + to_string(phi.src()) + " " + to_string(phi.tgt()) + " " + to_string(phi.scheme()) + ")";
    case Instruction::Kind::compose:
      return "(mu " + to_string(phi.head()) + " " +
             diagram_literal(phi.args(), [](const Instruction& x) { return to_string(x); }) + ")";
  }
  return {};
}

namespace detail {

// h normal, every label of b normal, shape(b) = arity(h).
inline Instruction compose_nf(const Instruction& h, const PastingDiagram<Instruction>& b) {
  if (all_units(b.tree)) return h;  // R1
  switch (h.kind()) {
    case Instruction::Kind::unit:  // R2
      return rightmost_leaf(b.tree);
    case Instruction::Kind::contract:
      return Instruction::make_compose(h, b);
    case Instruction::Kind::compose: {  // R3
      const auto& a = h.args();
      auto nested = map_tree(a.tree, [](const Instruction& x, int) { return x.arity().tree; });
      auto pieces = decompose_tree(b.tree, nested);
      auto grafted = zip_labels(a.tree, pieces, [](const Instruction& x, const Tree<Instruction>& piece, int d) {
        return compose_nf(x, PastingDiagram<Instruction>{piece, d});
      });
      return compose_nf(h.head(), PastingDiagram<Instruction>{std::move(grafted), a.dim});
    }
  }
  throw InternalInconsistency("compose_nf: unknown instruction kind");
}

inline Instruction boundary_nf(const Instruction& phi, int l, Side side) {
  switch (phi.kind()) {
    case Instruction::Kind::unit:
      return Instruction::unit(l);
    case Instruction::Kind::contract:
      if (l == phi.dim() - 1) return side == Side::source ? phi.src() : phi.tgt();
      return boundary_nf(phi.src(), l, side);
    case Instruction::Kind::compose:
      return compose_nf(boundary_nf(phi.head(), l, side), diagram_boundary(phi.args(), l, side));
  }
  throw InternalInconsistency("boundary_nf: unknown instruction kind");
}

}  // namespace detail

// Innermost-first: normalize subterms, then rewrite the root with R1-R3.
inline Instruction normalize(const Instruction& t) {
  if (t.is_normal()) return t;
  switch (t.kind()) {
    case Instruction::Kind::unit:
      return t;
    case Instruction::Kind::contract:
      return Instruction::make_contract(normalize(t.src()), normalize(t.tgt()), t.scheme());
    case Instruction::Kind::compose:
      return detail::compose_nf(normalize(t.head()),
                                map_diagram(t.args(), [](const Instruction& x) { return normalize(x); }));
  }
  throw InternalInconsistency("normalize: unknown instruction kind");
}

inline Instruction instr_boundary(const Instruction& phi, int l, Side side) {
  if (l < 0 || l > phi.dim())
    throw DimensionError("instr_boundary: level " + std::to_string(l) + " above dimension " + std::to_string(phi.dim()));
  const Instruction n = normalize(phi);
  if (l == n.dim()) return n;
  return detail::boundary_nf(n, l, side);
}

// The globular set L1.
struct InstructionHost {
  using cell_type = Instruction;
  int dim(const Instruction& x) const { return x.dim(); }
  Instruction boundary(const Instruction& x, int l, Side s) const { return instr_boundary(x, l, s); }
};

inline bool parallel(const Instruction& a, const Instruction& b) {
  if (a.dim() != b.dim()) throw DimensionError("parallel: instructions of different dimensions");
  if (a.dim() == 0) return true;
  const int d = a.dim() - 1;
  return instr_boundary(a, d, Side::source) == instr_boundary(b, d, Side::source) &&
         instr_boundary(a, d, Side::target) == instr_boundary(b, d, Side::target);
}

inline Instruction contract(const Instruction& src, const Instruction& tgt, const PastingScheme& k) {
  if (k.dim < 1) throw DimensionError("contract: the scheme must have dimension at least 1");
  if (src.dim() != k.dim - 1 || tgt.dim() != k.dim - 1)
    throw DimensionError("contract: boundary instructions must have dimension " + std::to_string(k.dim - 1));
  const PastingScheme kb = scheme_boundary(k, k.dim - 1);
  if (!(src.arity() == kb) || !(tgt.arity() == kb))
    throw ValidationError("contract: boundary arities must equal " + to_string(kb));
  if (!parallel(src, tgt)) throw ValidationError("contract: boundary instructions are not parallel");
  return Instruction::make_contract(normalize(src), normalize(tgt), k);
}

// Checks and normalizes mu(phi, args).
inline Instruction compose_instr(const Instruction& phi, const PastingDiagram<Instruction>& args) {
  if (args.dim != phi.dim() || !(args.shape() == phi.arity()))
    throw ValidationError("compose_instr: argument shape " + to_string(args.shape()) + " differs from arity " +
                          to_string(phi.arity()));
  auto nargs = map_diagram(args, [](const Instruction& x) { return normalize(x); });
  check_diagram(InstructionHost{}, nargs);
  return detail::compose_nf(normalize(phi), nargs);
}

inline Instruction sp(const PastingScheme& k) {
  if (is_globe(k)) return Instruction::unit(k.dim);
  const Instruction b = sp(scheme_boundary(k, k.dim - 1));
  return Instruction::make_contract(b, b, k);
}

inline Instruction id_instr(int m, int n) {
  if (m < 0 || m >= n) throw DimensionError("id_instr: need m < n");
  return sp(globe_scheme(m, n));
}

inline PastingScheme comp_scheme(int m1, int m2, int k, int n) {
  if (!(0 <= k && k < m1 && m1 <= n && k < m2 && m2 <= n))
    throw DimensionError("comp_instr: need k < m1 <= n and k < m2 <= n");
  return validate_scheme({m1, m2}, {k}, n);
}

inline Instruction comp_instr(int m1, int m2, int k, int n) { return sp(comp_scheme(m1, m2, k, n)); }

// Full well-formedness check of a raw term: arities, parallelism and
// args globularity, recursively.
inline void check_instruction(const Instruction& t) {
  switch (t.kind()) {
    case Instruction::Kind::unit:
      return;
    case Instruction::Kind::contract:
      check_instruction(t.src());
      check_instruction(t.tgt());
      (void)contract(t.src(), t.tgt(), t.scheme());
      return;
    case Instruction::Kind::compose:
      check_instruction(t.head());
      for_each_label(t.args().tree, [](const Instruction& x, int) { check_instruction(x); });
      check_diagram(InstructionHost{}, map_diagram(t.args(), [](const Instruction& x) { return normalize(x); }));
      return;
  }
}

}  // namespace womega

template <>
struct std::hash<womega::Instruction> {
  std::size_t operator()(const womega::Instruction& x) const noexcept { return x.hash(); }
};
