#pragma once

// The phi-to-chi padding: pads lambda_i, rho_i in L1 turn phi into phi_n,
// parallel to chi, and transport a cell w: xi(phi,u) -> xi(phi,v) to
// w_{n+1}: xi(chi,u) -> xi(chi,v).

#include <string>
#include <utility>
#include <vector>

#include "womega/algebra.hpp"
#include "womega/errors.hpp"
#include "womega/instruction.hpp"
#include "womega/pasting.hpp"

namespace womega {

// lambda[i-1], rho[i-1] hold lambda_i, rho_i for 1 <= i <= n+1;
// phi_tower[i] holds phi_i for 0 <= i <= n.
struct PadInstructions {
  int n = 0;
  Instruction phi, chi;
  std::vector<Instruction> lambda, rho, phi_tower;
};

template <WeakCategory X>
struct PadSequence {
  PadInstructions instr;
  std::vector<cell_t<X>> ell, r;  // ell[i-1] = ell_i, 1 <= i <= n+1
  std::vector<cell_t<X>> w;       // w[i], 0 <= i <= n+1
  const cell_t<X>& result() const { return w.back(); }
};

namespace detail {

[[noreturn]] inline void pad_failure(int stage, const std::string& what) {
  throw InternalInconsistency("padding stage " + std::to_string(stage) + ": " + what);
}

// a *_{i-1} (b *_{i-1} c), the shape shared by phi_i, w_i and dot-phi_i.
template <WeakCategory X>
cell_t<X> sandwich(const X& cat, const cell_t<X>& a, const cell_t<X>& b, const cell_t<X>& c, int k, int n) {
  return compose(cat, a, compose(cat, b, c, k, n), k, n);
}

}  // namespace detail

inline PadInstructions pad_instructions(const Instruction& phi0, const Instruction& chi0) {
  const Instruction phi = normalize(phi0), chi = normalize(chi0);
  const int n = phi.dim();
  if (n < 1) throw DimensionError("padding needs dimension at least 1");
  if (chi.dim() != n) throw DimensionError("padding: phi and chi have different dimensions");
  const PastingScheme& k = phi.arity();
  if (!(chi.arity() == k))
    throw ValidationError("padding: arities differ (" + to_string(k) + " vs " + to_string(chi.arity()) + ")");

  const L1Category L;
  PadInstructions out;
  out.n = n;
  out.phi = phi;
  out.chi = chi;
  out.phi_tower.push_back(phi);
  for (int i = 1; i <= n + 1; ++i) {
    const Instruction& prev = out.phi_tower.back();
    const PastingScheme ki = i <= n ? degenerate(scheme_boundary(k, i - 1), i) : degenerate(k, n + 1);
    const Instruction sc = i <= n ? instr_boundary(chi, i - 1, Side::source) : chi;
    const Instruction sp_ = i <= n ? instr_boundary(prev, i - 1, Side::source) : prev;
    const Instruction tp = i <= n ? instr_boundary(prev, i - 1, Side::target) : prev;
    const Instruction tc = i <= n ? instr_boundary(chi, i - 1, Side::target) : chi;
    out.lambda.push_back(contract(sc, sp_, ki));
    out.rho.push_back(contract(tp, tc, ki));
    if (i > n) break;
    const Instruction next = detail::sandwich(L, out.lambda.back(), prev, out.rho.back(), i - 1, n);
    if (!(next.arity() == k)) detail::pad_failure(i, "arity of phi_i differs from the arity of phi");
    if (!(instr_boundary(next, i - 1, Side::source) == sc) || !(instr_boundary(next, i - 1, Side::target) == tc))
      detail::pad_failure(i, "the (i-1)-boundary of phi_i differs from that of chi");
    out.phi_tower.push_back(next);
  }
  if (!parallel(out.phi_tower.back(), chi)) detail::pad_failure(n, "phi_n is not parallel to chi");
  return out;
}

template <WeakCategory X>
PadSequence<X> pad(const X& cat, const PadInstructions& P, const PastingDiagram<cell_t<X>>& u,
                   const PastingDiagram<cell_t<X>>& v, const cell_t<X>& w) {
  const int n = P.n;
  const PastingScheme& k = P.phi.arity();
  if (u.dim != n || v.dim != n || !(u.shape() == k) || !(v.shape() == k))
    throw ValidationError("pad: u and v must have shape " + to_string(k));
  if (!(diagram_boundary(u, n - 1, Side::source) == diagram_boundary(v, n - 1, Side::source)) ||
      !(diagram_boundary(u, n - 1, Side::target) == diagram_boundary(v, n - 1, Side::target)))
    throw BoundaryMismatch("pad: u and v are not parallel");
  if (cat.dim(w) != n + 1) throw DimensionError("pad: w must have dimension n+1");
  if (!(cat.boundary(w, n, Side::source) == cat.eval(P.phi, u)) ||
      !(cat.boundary(w, n, Side::target) == cat.eval(P.phi, v)))
    throw BoundaryMismatch("pad: w is not a cell xi(phi,u) -> xi(phi,v)");

  PadSequence<X> out;
  out.instr = P;
  out.w.push_back(w);
  for (int i = 1; i <= n + 1; ++i) {
    const auto su = i <= n ? degenerate(diagram_boundary(u, i - 1, Side::source), i) : degenerate(u, n + 1);
    const auto tv = i <= n ? degenerate(diagram_boundary(v, i - 1, Side::target), i) : degenerate(v, n + 1);
    out.ell.push_back(cat.eval(P.lambda[i - 1], su));
    out.r.push_back(cat.eval(P.rho[i - 1], tv));
    out.w.push_back(detail::sandwich(cat, out.ell.back(), out.w.back(), out.r.back(), i - 1, n + 1));
    const Instruction& target_instr = i <= n ? P.phi_tower[i] : P.chi;
    if (!(cat.boundary(out.w.back(), n, Side::source) == cat.eval(target_instr, u)) ||
        !(cat.boundary(out.w.back(), n, Side::target) == cat.eval(target_instr, v)))
      detail::pad_failure(i, "w_i does not have the expected n-boundary");
  }
  return out;
}

template <WeakCategory X>
PadSequence<X> pad(const X& cat, const Instruction& phi, const Instruction& chi, const PastingDiagram<cell_t<X>>& u,
                   const PastingDiagram<cell_t<X>>& v, const cell_t<X>& w) {
  return pad(cat, pad_instructions(phi, chi), u, v, w);
}

inline Instruction coherence_instr(const Instruction& phi, const Instruction& phi2) {
  if (!(phi.arity() == phi2.arity())) throw ValidationError("coherence: arities differ");
  return contract(phi, phi2, degenerate(phi.arity(), phi.dim() + 1));
}

// An (n+1)-cell xi(phi,u) -> xi(phi2,u).
template <WeakCategory X>
cell_t<X> coherence(const X& cat, const Instruction& phi, const Instruction& phi2, const PastingDiagram<cell_t<X>>& u) {
  return cat.eval(coherence_instr(phi, phi2), degenerate(u, u.dim + 1));
}

template <WeakCategory X>
struct PadNaturality {
  PadSequence<X> padding;
  std::vector<Instruction> dot_phi;  // dot_phi[i], 0 <= i <= n+1
  cell_t<X> padded, chi_dot_w, witness;
};

// Given dot_phi: phi -> phi and dot_chi: chi -> chi of arity shape(ww),
// pads w = xi(dot_phi, ww) and checks w_i = xi(dot_phi_i, ww) at every stage.
template <WeakCategory X>
PadNaturality<X> pad_naturality(const X& cat, const Instruction& phi, const Instruction& chi,
                                const Instruction& dot_phi, const Instruction& dot_chi,
                                const PastingDiagram<cell_t<X>>& ww) {
  const PadInstructions P = pad_instructions(phi, chi);
  const int n = P.n;
  if (dot_phi.dim() != n + 1 || dot_chi.dim() != n + 1 || ww.dim != n + 1)
    throw DimensionError("pad_naturality: dot instructions and ww must have dimension n+1");
  if (!(dot_phi.arity() == dot_chi.arity()) || !(dot_phi.arity() == ww.shape()))
    throw ValidationError("pad_naturality: dot_phi, dot_chi and ww must share one arity");
  if (!(scheme_boundary(dot_phi.arity(), n) == P.phi.arity()))
    throw ValidationError("pad_naturality: the arity of dot_phi is not a cell k -> k");
  const auto is_endo = [n](const Instruction& d, const Instruction& e) {
    return instr_boundary(d, n, Side::source) == e && instr_boundary(d, n, Side::target) == e;
  };
  if (!is_endo(dot_phi, P.phi)) throw ValidationError("pad_naturality: dot_phi is not a cell phi -> phi");
  if (!is_endo(dot_chi, P.chi)) throw ValidationError("pad_naturality: dot_chi is not a cell chi -> chi");

  const auto u = diagram_boundary(ww, n, Side::source);
  const auto v = diagram_boundary(ww, n, Side::target);
  PadNaturality<X> out{pad(cat, P, u, v, cat.eval(dot_phi, ww)), {normalize(dot_phi)}, {}, {}, {}};
  const L1Category L;
  for (int i = 1; i <= n + 1; ++i) {
    out.dot_phi.push_back(detail::sandwich(L, P.lambda[i - 1], out.dot_phi.back(), P.rho[i - 1], i - 1, n + 1));
    if (!(out.padding.w[i] == cat.eval(out.dot_phi.back(), ww)))
      detail::pad_failure(i, "w_i differs from xi(dot_phi_i, ww)");
  }
  out.padded = out.padding.result();
  out.chi_dot_w = cat.eval(dot_chi, ww);
  out.witness = coherence(cat, out.dot_phi.back(), normalize(dot_chi), ww);
  return out;
}

}  // namespace womega
