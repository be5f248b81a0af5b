#pragma once

// Text syntax for schemes, instruction terms and diagrams.
//
//   scheme  := "[" nat+ ("/" nat*)? "]" "@" nat
//   term    := "(e " nat ")" | "(kappa " term term scheme ")" | "(mu " term diagram ")"
//   diagram := "[" item+ ("/" item*)? "]" "@" nat      item: a term or a cell name

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "womega/errors.hpp"
#include "womega/instruction.hpp"
#include "womega/pasting.hpp"
#include "womega/strict.hpp"

namespace womega {

class SyntaxError : public ValidationError {
 public:
  SyntaxError(std::size_t column, const std::string& what)
      : ValidationError("at column " + std::to_string(column + 1) + ": " + what, static_cast<int>(column)) {}
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::size_t pos() {
    skip();
    return i_;
  }
  bool done() { return pos() >= s_.size(); }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(pos(), what + (i_ < s_.size() ? std::string(", found '") + s_[i_] + "'" : ", found end of input"));
  }

  bool at_nat() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  int nat() {
    if (!at_nat()) fail("expected a natural number");
    long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > 1000000) fail("number too large");
    }
    return static_cast<int>(v);
  }

  std::string word() {
    skip();
    const std::size_t b = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    return std::string(s_.substr(b, i_ - b));
  }

  // A cell name: a run without whitespace or brackets, parentheses balanced.
  std::string name() {
    skip();
    const std::size_t b = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']' || c == '/' || c == '@') break;
      if (c == '(') ++depth;
      if (c == ')' && --depth < 0) break;
      ++i_;
    }
    if (i_ == b) fail("expected a cell name");
    return std::string(s_.substr(b, i_ - b));
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

template <class F>
auto annotate(std::size_t column, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SyntaxError&) {
    throw;
  } catch (const Error& e) {
    throw SyntaxError(column, e.what());
  }
}

template <class Item, class P>
void table(Cursor& c, P&& item, std::vector<Item>& entries, std::vector<Item>& joints, int& ambient) {
  c.expect('[');
  while (c.peek() != '/' && c.peek() != ']') entries.push_back(item(c));
  if (entries.empty()) c.fail("expected at least one entry");
  if (c.accept('/'))
    while (c.peek() != ']') joints.push_back(item(c));
  c.expect(']');
  c.expect('@');
  ambient = c.nat();
}

inline PastingScheme scheme(Cursor& c) {
  const std::size_t at = c.pos();
  std::vector<int> outer, inner;
  int n = 0;
  table<int>(c, [](Cursor& k) { return k.nat(); }, outer, inner, n);
  return annotate(at, [&] { return validate_scheme(outer, inner, n); });
}

Instruction term(Cursor& c);

template <class H, class Item, class P>
PastingDiagram<typename H::cell_type> diagram(Cursor& c, const H& host, P&& item) {
  const std::size_t at = c.pos();
  std::vector<Item> entries, joints;
  int n = 0;
  table<Item>(c, item, entries, joints, n);
  return annotate(at, [&] {
    std::vector<int> outer, inner;
    for (const auto& x : entries) outer.push_back(host.dim(x));
    for (const auto& x : joints) inner.push_back(host.dim(x));
    return validate_diagram(host, validate_scheme(outer, inner, n), entries, joints);
  });
}

inline Instruction term(Cursor& c) {
  const std::size_t at = c.pos();
  c.expect('(');
  const std::string head = c.word();
  Instruction out;
  if (head == "e") {
    const int n = c.nat();
    out = Instruction::unit(n);
  } else if (head == "kappa") {
    const Instruction s = term(c);
    const Instruction t = term(c);
    const PastingScheme k = scheme(c);
    out = annotate(at, [&] {
      (void)contract(s, t, k);
      return Instruction::make_contract(s, t, k);
    });
  } else if (head == "mu") {
    const Instruction h = term(c);
    const auto args = diagram<InstructionHost, Instruction>(c, InstructionHost{}, [](Cursor& k) { return term(k); });
    out = annotate(at, [&] { return Instruction::make_compose(h, args); });
  } else {
    throw SyntaxError(at, "unknown term constructor '" + head + "'");
  }
  c.expect(')');
  return out;
}

template <class T>
T whole(std::string_view text, const std::function<T(Cursor&)>& f) {
  Cursor c(text);
  T out = f(c);
  if (!c.done()) c.fail("trailing input");
  return out;
}

}  // namespace detail

inline PastingScheme parse_scheme(std::string_view text) {
  return detail::whole<PastingScheme>(text, [](detail::Cursor& c) { return detail::scheme(c); });
}

// Returns the term as written; use normalize() for its normal form.
inline Instruction parse_term(std::string_view text) {
  return detail::whole<Instruction>(text, [](detail::Cursor& c) { return detail::term(c); });
}

inline PastingDiagram<Instruction> parse_term_diagram(std::string_view text) {
  return detail::whole<PastingDiagram<Instruction>>(text, [](detail::Cursor& c) {
    return detail::diagram<InstructionHost, Instruction>(c, InstructionHost{}, [](detail::Cursor& k) { return detail::term(k); });
  });
}

// Resolves a name to a cell: the lowest dimension holding it, else a formal
// identity "id(...)" above the truncation.
inline std::optional<CellRef> resolve_cell(const StrictCatTable& t, std::string_view name) {
  for (int d = 0; d <= t.truncation(); ++d)
    if (auto c = t.find(d, name)) return c;
  for (int d = t.truncation() + 1, peeled = 1; name.size() > 4 * static_cast<std::size_t>(peeled); ++d, ++peeled)
    if (auto c = t.find(d, name)) return c;
  return std::nullopt;
}

inline PastingDiagram<CellRef> parse_cell_diagram(std::string_view text, const StrictCatTable& t) {
  return detail::whole<PastingDiagram<CellRef>>(text, [&](detail::Cursor& c) {
    return detail::diagram<StrictCatTable, CellRef>(c, t, [&](detail::Cursor& k) {
      const std::size_t at = k.pos();
      const std::string n = k.name();
      auto r = resolve_cell(t, n);
      if (!r) throw SyntaxError(at, "unknown cell '" + n + "'");
      return *r;
    });
  });
}

inline std::string to_string(const PastingDiagram<Instruction>& u) {
  return diagram_literal(u, [](const Instruction& x) { return to_string(x); });
}

inline std::string to_string(const PastingDiagram<CellRef>& u, const StrictCatTable& t) {
  return diagram_literal(u, [&](CellRef x) { return t.name(x); });
}

inline std::string to_string(const PastingDiagram<CellRef>& u, const GlobularSet& g) {
  return diagram_literal(u, [&](CellRef x) { return g.name(x); });
}

}  // namespace womega
