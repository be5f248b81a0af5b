#pragma once

// Weak ω-categories as evaluation structures xi(phi, u), and the derived
// identities and binary composites.

#include <algorithm>
#include <concepts>
#include <memory>
#include <string>
#include <utility>

#include "womega/errors.hpp"
#include "womega/globset.hpp"
#include "womega/instruction.hpp"
#include "womega/pasting.hpp"

namespace womega {

template <class X>
concept WeakCategory = GlobularHost<X> && requires(const X& x, const Instruction& phi,
                                                   const PastingDiagram<typename X::cell_type>& u) {
  { x.eval(phi, u) } -> std::convertible_to<typename X::cell_type>;
};

template <WeakCategory X>
using cell_t = typename X::cell_type;

template <WeakCategory X>
cell_t<X> identity(const X& cat, const cell_t<X>& x, int n) {
  const int m = cat.dim(x);
  if (m >= n) throw DimensionError("identity: need dim(x) < n");
  return cat.eval(id_instr(m, n), unit_diagram(cat, x, n));
}

// Iterated identity; the cell itself when n = dim(x).
template <WeakCategory X>
cell_t<X> lift_to(const X& cat, const cell_t<X>& x, int n) {
  return cat.dim(x) == n ? x : identity(cat, x, n);
}

template <WeakCategory X>
cell_t<X> compose(const X& cat, const cell_t<X>& u, const cell_t<X>& v, int k, int n) {
  const int m1 = cat.dim(u), m2 = cat.dim(v);
  if (!(0 <= k && k < m1 && m1 <= n && k < m2 && m2 <= n))
    throw DimensionError("compose: need k < dims <= n (k=" + std::to_string(k) + ", dims " + std::to_string(m1) +
                         "," + std::to_string(m2) + ", n=" + std::to_string(n) + ")");
  if (!(cat.boundary(u, k, Side::target) == cat.boundary(v, k, Side::source)))
    throw BoundaryMismatch("compose: t_" + std::to_string(k) + "(u) differs from s_" + std::to_string(k) + "(v)");
  return cat.eval(comp_instr(m1, m2, k, n), glue(unit_diagram(cat, u, m1), k, unit_diagram(cat, v, m2), n));
}

template <WeakCategory X>
cell_t<X> compose(const X& cat, const cell_t<X>& u, const cell_t<X>& v, int k) {
  return compose(cat, u, v, k, std::max(cat.dim(u), cat.dim(v)));
}

template <WeakCategory X>
bool parallel_cells(const X& cat, const cell_t<X>& a, const cell_t<X>& b) {
  if (cat.dim(a) != cat.dim(b)) return false;
  if (cat.dim(a) == 0) return true;
  const int d = cat.dim(a) - 1;
  return cat.boundary(a, d, Side::source) == cat.boundary(b, d, Side::source) &&
         cat.boundary(a, d, Side::target) == cat.boundary(b, d, Side::target);
}

// L1 with its own multiplication: the free weak ω-category on one point.
struct L1Category : InstructionHost {
  Instruction eval(const Instruction& phi, const PastingDiagram<Instruction>& u) const { return compose_instr(phi, u); }
};

struct FreeWeakCell {
  Instruction instr;
  PastingDiagram<CellRef> diagram;
  bool operator==(const FreeWeakCell& o) const { return instr == o.instr && diagram == o.diagram; }
};

// The free weak ω-category LX on a globular set X.
class FreeWeak {
 public:
  using cell_type = FreeWeakCell;

  explicit FreeWeak(GlobularSet gens) : gens_(std::make_shared<const GlobularSet>(std::move(gens))) {}

  const GlobularSet& generators() const { return *gens_; }

  FreeWeakCell generator(CellRef x) const {
    return {Instruction::unit(x.dim), unit_diagram(*gens_, x, x.dim)};
  }

  // Each label x becomes the generator (e_d, [x]).
  PastingDiagram<FreeWeakCell> generator_diagram(const PastingDiagram<CellRef>& u) const {
    check_diagram(*gens_, u);
    return map_diagram(u, [this](CellRef x) { return generator(x); });
  }

  FreeWeakCell make(Instruction phi, PastingDiagram<CellRef> u) const {
    if (phi.dim() != u.dim || !(phi.arity() == u.shape()))
      throw ValidationError("free cell: arity " + to_string(phi.arity()) + " differs from shape " +
                            to_string(u.shape()));
    check_diagram(*gens_, u);
    return {normalize(phi), std::move(u)};
  }

  int dim(const FreeWeakCell& c) const { return c.instr.dim(); }

  FreeWeakCell boundary(const FreeWeakCell& c, int l, Side s) const {
    if (l == dim(c)) return c;
    return {instr_boundary(c.instr, l, s), diagram_boundary(c.diagram, l, s)};
  }

  FreeWeakCell eval(const Instruction& phi, const PastingDiagram<FreeWeakCell>& u) const {
    if (u.dim != phi.dim() || !(u.shape() == phi.arity()))
      throw ValidationError("eval: diagram shape " + to_string(u.shape()) + " differs from arity " +
                            to_string(phi.arity()));
    auto instrs = map_diagram(u, [](const FreeWeakCell& c) { return c.instr; });
    auto diagrams = map_diagram(u, [](const FreeWeakCell& c) { return c.diagram; });
    return {compose_instr(phi, instrs), flatten(diagrams)};
  }

 private:
  std::shared_ptr<const GlobularSet> gens_;
};

inline FreeWeak free_weak(GlobularSet X) { return FreeWeak(std::move(X)); }

}  // namespace womega
