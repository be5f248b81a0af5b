#pragma once

// Invertible cells as a greatest fixed point on finite strict tables, the
// relation ~, essential n-surjectivity / n-injectivity, and ω-weak
// equivalence verdicts with the 2-out-of-3 / 2-out-of-6 / retract harnesses.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "womega/errors.hpp"
#include "womega/strict.hpp"

namespace womega {

struct InverseWitness {
  CellRef inverse, p, q;
};

class InvertibleSet {
 public:
  explicit InvertibleSet(std::shared_ptr<const StrictCatTable> host) : host_(std::move(host)) {
    const StrictCatTable& t = *host_;
    const int n = t.truncation();
    between_.resize(n);
    for (int d = 1; d <= n; ++d)
      for (CellRef c : t.cells(d)) between_[d - 1][{t.src(c).index, t.tgt(c).index}].push_back(c.index);

    member_.resize(n + 1);
    for (int d = 1; d <= n; ++d) member_[d].assign(t.count(d), 1);
    for (bool changed = true; changed;) {
      changed = false;
      ++iterations_;
      for (int d = 1; d <= n; ++d)
        for (CellRef u : t.cells(d))
          if (member_[d][u.index] && !find_witness(u)) {
            member_[d][u.index] = 0;
            changed = true;
          }
    }
    witness_.resize(n + 1);
    for (int d = 1; d <= n; ++d) {
      witness_[d].resize(t.count(d));
      for (CellRef u : t.cells(d))
        if (member_[d][u.index]) witness_[d][u.index] = find_witness(u);
    }
  }

  const StrictCatTable& host() const { return *host_; }
  std::shared_ptr<const StrictCatTable> host_ptr() const { return host_; }
  int iterations() const { return iterations_; }

  bool contains(CellRef c) const {
    if (!host_->contains(c)) throw ValidationError("invertible: cell out of range");
    if (c.dim == 0) return false;
    if (c.dim > host_->truncation()) return true;
    return member_[c.dim][c.index] != 0;
  }

  std::optional<InverseWitness> witness(CellRef c) const {
    if (!contains(c)) return std::nullopt;
    if (c.dim > host_->truncation()) {
      const CellRef e = host_->identity_of(c);
      return InverseWitness{c, e, e};
    }
    return witness_[c.dim][c.index];
  }

  std::vector<CellRef> members(int d) const {
    std::vector<CellRef> out;
    for (CellRef c : host_->cells(d))
      if (contains(c)) out.push_back(c);
    return out;
  }

  // The (d+1)-cells a -> b for parallel d-cells a, b.
  std::vector<CellRef> between(CellRef a, CellRef b) const {
    const StrictCatTable& t = *host_;
    if (a.dim != b.dim) throw DimensionError("between: cells of different dimensions");
    if (a.dim >= t.truncation()) {
      if (a == b) return {t.identity_of(a)};
      return {};
    }
    std::vector<CellRef> out;
    const auto it = between_[a.dim].find({a.index, b.index});
    if (it != between_[a.dim].end())
      for (int i : it->second) out.push_back({a.dim + 1, i});
    return out;
  }

  std::optional<CellRef> sim_witness(CellRef x, CellRef y) const {
    if (x.dim != y.dim) throw DimensionError("sim: cells of different dimensions");
    for (CellRef c : between(x, y))
      if (contains(c)) return c;
    return std::nullopt;
  }

  bool sim(CellRef x, CellRef y) const { return sim_witness(x, y).has_value(); }

 private:
  std::optional<CellRef> first_member(CellRef a, CellRef b) const {
    for (CellRef c : between(a, b))
      if (contains(c)) return c;
    return std::nullopt;
  }

  std::optional<InverseWitness> find_witness(CellRef u) const {
    const StrictCatTable& t = *host_;
    const int d = u.dim;
    const CellRef x = t.src(u), y = t.tgt(u);
    for (CellRef inv : between(y, x)) {
      const auto p = first_member(t.compose_same(u, inv, d - 1), t.identity_of(x));
      if (!p) continue;
      const auto q = first_member(t.compose_same(inv, u, d - 1), t.identity_of(y));
      if (q) return InverseWitness{inv, *p, *q};
    }
    return std::nullopt;
  }

  std::shared_ptr<const StrictCatTable> host_;
  std::vector<std::map<std::pair<int, int>, std::vector<int>>> between_;
  std::vector<std::vector<char>> member_;
  std::vector<std::vector<std::optional<InverseWitness>>> witness_;
  int iterations_ = 0;
};

inline InvertibleSet invertible_cells(std::shared_ptr<const StrictCatTable> t) { return InvertibleSet(std::move(t)); }

inline bool sim(const InvertibleSet& X, CellRef x, CellRef y) { return X.sim(x, y); }

struct Verdict {
  bool holds = true;
  int level = -1;  // first failing k
  std::string trace;
};

namespace detail {

inline bool parallel_in(const StrictCatTable& t, CellRef u, CellRef v) {
  return u.dim == 0 || (t.src(u) == t.src(v) && t.tgt(u) == t.tgt(v));
}

inline void check_hosts(const CellMap& f, const InvertibleSet& X, const InvertibleSet& Y) {
  if (!(f.source() == X.host()) || !(f.target() == Y.host()))
    throw ValidationError("invertible sets do not belong to the map's source and target");
  const auto v = globular_violations(f);
  if (!v.empty()) throw ValidationError("not a globular map: " + v.front());
}

}  // namespace detail

// Unfolded form: essentially 0-surjective, and for 1 <= k <= n every
// w: fu -> fv over a parallel (k-1)-pair lifts up to ~.
inline Verdict ess_surjective(const CellMap& f, int n, const InvertibleSet& X, const InvertibleSet& Y) {
  detail::check_hosts(f, X, Y);
  const StrictCatTable& A = f.source();
  const StrictCatTable& B = f.target();
  for (CellRef y : B.cells(0)) {
    bool hit = false;
    for (CellRef x : A.cells(0))
      if (Y.sim(f(x), y)) {
        hit = true;
        break;
      }
    if (!hit) return {false, 0, "k=0: no object maps near " + B.name(y)};
  }
  for (int k = 1; k <= n; ++k)
    for (CellRef u : A.cells(k - 1))
      for (CellRef v : A.cells(k - 1)) {
        if (!detail::parallel_in(A, u, v)) continue;
        const auto lifts = X.between(u, v);
        for (CellRef w : Y.between(f(u), f(v))) {
          bool hit = false;
          for (CellRef wb : lifts)
            if (Y.sim(f(wb), w)) {
              hit = true;
              break;
            }
          if (!hit)
            return {false, k,
                    "k=" + std::to_string(k) + ": " + B.name(w) + " over (" + A.name(u) + ", " + A.name(v) +
                        ") has no lift up to ~"};
        }
      }
  return {};
}

// Unfolded form: for 0 <= k <= n and parallel k-cells, fu ~ fv implies u ~ v.
inline Verdict ess_injective(const CellMap& f, int n, const InvertibleSet& X, const InvertibleSet& Y) {
  detail::check_hosts(f, X, Y);
  const StrictCatTable& A = f.source();
  for (int k = 0; k <= n; ++k)
    for (CellRef u : A.cells(k))
      for (CellRef v : A.cells(k)) {
        if (!detail::parallel_in(A, u, v)) continue;
        if (Y.sim(f(u), f(v)) && !X.sim(u, v))
          return {false, k, "k=" + std::to_string(k) + ": f" + A.name(u) + " ~ f" + A.name(v) + " but " + A.name(u) +
                                " !~ " + A.name(v)};
      }
  return {};
}

inline Verdict ess_surjective(const CellMap& f, int n) {
  return ess_surjective(f, n, InvertibleSet(f.source_ptr()), InvertibleSet(f.target_ptr()));
}

inline Verdict ess_injective(const CellMap& f, int n) {
  return ess_injective(f, n, InvertibleSet(f.source_ptr()), InvertibleSet(f.target_ptr()));
}

inline Verdict preserves_invertibles(const CellMap& f, const InvertibleSet& X, const InvertibleSet& Y) {
  detail::check_hosts(f, X, Y);
  for (int d = 1; d <= f.source().truncation(); ++d)
    for (CellRef u : X.members(d))
      if (!Y.contains(f(u))) return {false, d, f.source().name(u) + " is invertible but its image is not"};
  return {};
}

inline Verdict reflects_invertibles(const CellMap& f, const InvertibleSet& X, const InvertibleSet& Y) {
  detail::check_hosts(f, X, Y);
  for (int d = 1; d <= f.source().truncation(); ++d)
    for (CellRef u : f.source().cells(d))
      if (Y.contains(f(u)) && !X.contains(u))
        return {false, d, "f" + f.source().name(u) + " is invertible but " + f.source().name(u) + " is not"};
  return {};
}

inline Verdict reflects_invertibles(const CellMap& f) {
  return reflects_invertibles(f, InvertibleSet(f.source_ptr()), InvertibleSet(f.target_ptr()));
}

inline int verdict_cap(const CellMap& f) { return std::max(f.source().truncation(), f.target().truncation()) + 1; }

struct EquivReport {
  int cap = 0;
  std::vector<bool> surjective;  // index n = 0..cap
  std::vector<bool> injective;
  Verdict surj, inj, reflect;
  bool weak_equivalence = false;
};

// Verdicts for n = 0..cap; by the truncation semantics they are constant
// beyond verdict_cap(f).
inline EquivReport equiv_report(const CellMap& f, const InvertibleSet& X, const InvertibleSet& Y, int cap = -1) {
  EquivReport r;
  r.cap = cap < 0 ? verdict_cap(f) : cap;
  r.surj = ess_surjective(f, r.cap, X, Y);
  r.inj = ess_injective(f, r.cap, X, Y);
  r.reflect = reflects_invertibles(f, X, Y);
  for (int n = 0; n <= r.cap; ++n) {
    r.surjective.push_back(r.surj.holds || n < r.surj.level);
    r.injective.push_back(r.inj.holds || n < r.inj.level);
  }
  r.weak_equivalence = r.surj.holds && r.cap >= verdict_cap(f);
  return r;
}

inline EquivReport is_weak_equivalence(const StrictFunctor& f) {
  return equiv_report(f, InvertibleSet(f.source_ptr()), InvertibleSet(f.target_ptr()));
}

struct HarnessReport {
  std::vector<std::pair<std::string, EquivReport>> maps;
  std::vector<std::string> violations;
  bool consistent() const { return violations.empty(); }
  const EquivReport& operator[](const std::string& name) const {
    for (const auto& [k, v] : maps)
      if (k == name) return v;
    throw Error("harness: no map named " + name);
  }
};

namespace detail {

inline std::shared_ptr<const InvertibleSet> inv_for(std::vector<std::shared_ptr<const InvertibleSet>>& cache,
                                                    const std::shared_ptr<const StrictCatTable>& t) {
  for (const auto& s : cache)
    if (s->host() == *t) return s;
  cache.push_back(std::make_shared<const InvertibleSet>(t));
  return cache.back();
}

}  // namespace detail

// Checks the three 2-out-of-3 implications and their per-n forms.
inline HarnessReport two_of_three(const StrictFunctor& f, const StrictFunctor& g) {
  if (!(f.target() == g.source())) throw ValidationError("two-of-three: cod(f) differs from dom(g)");
  const StrictFunctor gf = compose_functors(f, g);
  std::vector<std::shared_ptr<const InvertibleSet>> cache;
  const auto X = detail::inv_for(cache, f.source_ptr());
  const auto Y = detail::inv_for(cache, f.target_ptr());
  const auto Z = detail::inv_for(cache, g.target_ptr());
  const int cap = std::max({f.source().truncation(), f.target().truncation(), g.target().truncation()}) + 2;
  HarnessReport h;
  h.maps.emplace_back("f", equiv_report(f, *X, *Y, cap));
  h.maps.emplace_back("g", equiv_report(g, *Y, *Z, cap));
  h.maps.emplace_back("gf", equiv_report(gf, *X, *Z, cap));
  const auto& F = h["f"];
  const auto& G = h["g"];
  const auto& GF = h["gf"];
  if (!preserves_invertibles(g, *Y, *Z).holds) h.violations.push_back("g does not preserve invertible cells");
  if (F.weak_equivalence && G.weak_equivalence && !GF.weak_equivalence) h.violations.push_back("f, g equivalences but gf is not");
  if (G.weak_equivalence && GF.weak_equivalence && !F.weak_equivalence) h.violations.push_back("g, gf equivalences but f is not");
  if (F.weak_equivalence && GF.weak_equivalence && !G.weak_equivalence) h.violations.push_back("f, gf equivalences but g is not");
  for (int n = 0; n < cap; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    if (F.surjective[n] && G.surjective[n] && !GF.surjective[n]) h.violations.push_back("per-n implication for gf fails" + at);
    if (G.reflect.holds && G.surjective[n + 1] && GF.surjective[n] && !F.surjective[n])
      h.violations.push_back("per-n implication for f fails" + at);
    if (F.surjective[n] && GF.surjective[n] && !G.surjective[n]) h.violations.push_back("per-n implication for g fails" + at);
  }
  return h;
}

inline HarnessReport two_of_six(const StrictFunctor& f, const StrictFunctor& g, const StrictFunctor& h3) {
  if (!(f.target() == g.source()) || !(g.target() == h3.source()))
    throw ValidationError("two-of-six: maps are not composable");
  const StrictFunctor gf = compose_functors(f, g);
  const StrictFunctor hg = compose_functors(g, h3);
  const StrictFunctor hgf = compose_functors(gf, h3);
  HarnessReport r;
  r.maps.emplace_back("f", is_weak_equivalence(f));
  r.maps.emplace_back("g", is_weak_equivalence(g));
  r.maps.emplace_back("h", is_weak_equivalence(h3));
  r.maps.emplace_back("gf", is_weak_equivalence(gf));
  r.maps.emplace_back("hg", is_weak_equivalence(hg));
  r.maps.emplace_back("hgf", is_weak_equivalence(hgf));
  if (r["gf"].weak_equivalence && r["hg"].weak_equivalence)
    for (const char* m : {"f", "g", "h", "hgf"})
      if (!r[m].weak_equivalence) r.violations.push_back(std::string("gf, hg equivalences but ") + m + " is not");
  return r;
}

inline bool same_map(const CellMap& a, const CellMap& b) {
  return a.source() == b.source() && a.target() == b.target() && a.images() == b.images();
}

// f a retract of f2: p i = 1, q j = 1, f2 i = j f, f p = q f2.
struct RetractDiagram {
  CellMap f, f2, i, j, p, q;
};

inline std::vector<std::string> retract_violations(const RetractDiagram& d, int n) {
  std::vector<std::string> out;
  if (!same_map(compose_maps(d.i, d.p), identity_map(d.f.source_ptr()))) out.push_back("p i is not the identity");
  if (!same_map(compose_maps(d.j, d.q), identity_map(d.f.target_ptr()))) out.push_back("q j is not the identity");
  if (!same_map(compose_maps(d.i, d.f2), compose_maps(d.f, d.j))) out.push_back("left square does not commute");
  if (!same_map(compose_maps(d.p, d.f), compose_maps(d.f2, d.q))) out.push_back("right square does not commute");
  if (!out.empty()) return out;
  const InvertibleSet X(d.f.source_ptr()), Y(d.f.target_ptr()), X2(d.f2.source_ptr()), Y2(d.f2.target_ptr());
  if (!preserves_invertibles(d.q, Y2, Y).holds) return out;  // hypothesis fails; nothing to check
  const Verdict s2 = ess_surjective(d.f2, n, X2, Y2);
  const Verdict s = ess_surjective(d.f, n, X, Y);
  for (int k = 0; k <= n; ++k)
    if ((s2.holds || k < s2.level) && !(s.holds || k < s.level))
      out.push_back("f2 essentially " + std::to_string(k) + "-surjective but its retract f is not");
  return out;
}

}  // namespace womega
