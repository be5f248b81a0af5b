#pragma once

// Finite strict ω-categories given by tables, truncated at N. A cell of
// dimension N+j (j > 0) is the formal j-fold identity of an N-cell and
// shares that cell's index.

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "womega/algebra.hpp"
#include "womega/errors.hpp"
#include "womega/globset.hpp"
#include "womega/instruction.hpp"
#include "womega/pasting.hpp"

namespace womega {

class StrictCatTable {
 public:
  using cell_type = CellRef;

  StrictCatTable() : StrictCatTable(GlobularSet()) {}

  // Allocates empty tables (every entry undefined) over the carrier.
  explicit StrictCatTable(GlobularSet carrier) : carrier_(std::move(carrier)) {
    const int n = truncation();
    id_.resize(n);
    for (int d = 0; d < n; ++d) id_[d].assign(carrier_.count(d), -1);
    comp_.resize(n + 1);
    for (int d = 1; d <= n; ++d) {
      comp_[d].resize(d);
      const auto c = static_cast<std::size_t>(carrier_.count(d));
      for (int k = 0; k < d; ++k) comp_[d][k].assign(c * c, -1);
    }
  }

  void set_identity(CellRef x, int r) {
    if (x.dim < 0 || x.dim >= truncation() || !carrier_.contains(x) || r < 0 || r >= carrier_.count(x.dim + 1))
      throw ValidationError("table: identity entry out of range");
    id_[x.dim][x.index] = r;
  }

  void set_composite(int k, CellRef u, CellRef v, int r) {
    const int d = u.dim;
    if (d < 1 || d > truncation() || v.dim != d || k < 0 || k >= d || !carrier_.contains(u) || !carrier_.contains(v) ||
        r < 0 || r >= carrier_.count(d))
      throw ValidationError("table: composite entry out of range");
    comp_[d][k][slot(d, u.index, v.index)] = r;
  }

  int truncation() const { return carrier_.truncation(); }
  const GlobularSet& carrier() const { return carrier_; }

  int count(int d) const { return d <= truncation() ? carrier_.count(d) : carrier_.count(truncation()); }

  bool contains(CellRef c) const {
    if (c.dim < 0) return false;
    if (c.dim <= truncation()) return carrier_.contains(c);
    return c.index >= 0 && c.index < carrier_.count(truncation());
  }

  bool formal(CellRef c) const { return c.dim > truncation(); }

  int dim(CellRef c) const { return c.dim; }

  std::vector<CellRef> cells(int d) const {
    std::vector<CellRef> out;
    for (int i = 0; i < count(d); ++i) out.push_back({d, i});
    return out;
  }

  CellRef boundary(CellRef c, int l, Side s) const {
    check(c);
    if (l < 0 || l > c.dim) throw DimensionError("boundary: level " + std::to_string(l) + " above dimension " + std::to_string(c.dim));
    if (l == c.dim) return c;
    const int n = truncation();
    if (c.dim > n) {
      if (l >= n) return {l, c.index};
      return carrier_.boundary({n, c.index}, l, s);
    }
    return carrier_.boundary(c, l, s);
  }

  CellRef src(CellRef c) const { return boundary(c, c.dim - 1, Side::source); }
  CellRef tgt(CellRef c) const { return boundary(c, c.dim - 1, Side::target); }

  std::string name(CellRef c) const {
    check(c);
    const int n = truncation();
    if (c.dim <= n) return carrier_.name(c);
    std::string s = carrier_.name({n, c.index});
    for (int j = n; j < c.dim; ++j) s = "id(" + s + ")";
    return s;
  }

  std::optional<CellRef> find(int d, std::string_view name) const {
    const int n = truncation();
    if (d < 0) return std::nullopt;
    if (d <= n) return carrier_.find(d, name);
    for (int j = n; j < d; ++j) {
      if (name.size() < 4 || name.substr(0, 3) != "id(" || name.back() != ')') return std::nullopt;
      name = name.substr(3, name.size() - 4);
    }
    auto base = carrier_.find(n, name);
    if (!base) return std::nullopt;
    return CellRef{d, base->index};
  }

  // Raw table entries; -1 when undefined.
  int identity_entry(CellRef x) const { return id_[x.dim][x.index]; }
  int composite_entry(int k, CellRef u, CellRef v) const { return comp_[u.dim][k][slot(u.dim, u.index, v.index)]; }

  CellRef identity_of(CellRef x) const {
    check(x);
    if (x.dim >= truncation()) return {x.dim + 1, x.index};
    const int r = id_[x.dim][x.index];
    if (r < 0) throw ValidationError("table: identity of '" + name(x) + "' undefined");
    return {x.dim + 1, r};
  }

  CellRef lift(CellRef x, int n) const {
    if (x.dim > n) throw DimensionError("lift: target dimension below the cell's");
    while (x.dim < n) x = identity_of(x);
    return x;
  }

  bool composable(CellRef u, CellRef v, int k) const {
    return u.dim == v.dim && k >= 0 && k < u.dim && boundary(u, k, Side::target) == boundary(v, k, Side::source);
  }

  // u *_k v for cells of equal dimension.
  CellRef compose_same(CellRef u, CellRef v, int k) const {
    check(u);
    check(v);
    if (u.dim != v.dim || k < 0 || k >= u.dim) throw DimensionError("compose: need equal dimensions above k");
    if (!composable(u, v, k))
      throw BoundaryMismatch("compose: t_" + std::to_string(k) + "(" + name(u) + ") differs from s_" + std::to_string(k) +
                             "(" + name(v) + ")");
    const int n = truncation();
    if (u.dim > n) {
      if (k >= n) return u;
      return {u.dim, lookup(n, k, u.index, v.index, u, v)};
    }
    return {u.dim, lookup(u.dim, k, u.index, v.index, u, v)};
  }

  // u *_{k,n} v with lower-dimensional factors lifted first.
  CellRef strict_compose(CellRef u, CellRef v, int k, int n) const {
    const int m = std::max(u.dim, v.dim);
    if (m > n) throw DimensionError("compose: factor above ambient dimension");
    return lift(compose_same(lift(u, m), lift(v, m), k), n);
  }

  // Strict evaluation of a pasting diagram: a left-to-right fold per node.
  CellRef eval_diagram(const PastingDiagram<CellRef>& u) const { return eval_node(u.tree, 0, u.dim); }

  CellRef eval(const Instruction& phi, const PastingDiagram<CellRef>& u) const {
    if (u.dim != phi.dim() || !(u.shape() == phi.arity()))
      throw ValidationError("eval: diagram shape " + to_string(u.shape()) + " differs from arity " +
                            to_string(phi.arity()));
    check_diagram(*this, u);
    return eval_diagram(u);
  }

  bool operator==(const StrictCatTable&) const = default;

 private:
  std::size_t slot(int d, int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(carrier_.count(d)) + static_cast<std::size_t>(j);
  }

  int lookup(int d, int k, int i, int j, CellRef u, CellRef v) const {
    const int r = comp_[d][k][slot(d, i, j)];
    if (r < 0)
      throw ValidationError("table: composite " + name(u) + " *_" + std::to_string(k) + " " + name(v) + " undefined");
    return r;
  }

  CellRef eval_node(const Tree<CellRef>& t, int h, int n) const {
    if (t.children.empty()) return lift(t.labels.front(), n);
    CellRef acc = eval_node(t.children.front(), h + 1, n);
    for (std::size_t j = 1; j < t.children.size(); ++j) acc = compose_same(acc, eval_node(t.children[j], h + 1, n), h);
    return acc;
  }

  void check(CellRef c) const {
    if (!contains(c)) throw ValidationError("cell reference out of range");
  }

  GlobularSet carrier_;
  std::vector<std::vector<int>> id_;                 // id_[d][i]: index at d+1
  std::vector<std::vector<std::vector<int>>> comp_;  // comp_[d][k][i*|X_d|+j]
};

struct TableReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

class ViolationLog {
 public:
  explicit ViolationLog(TableReport& r, std::size_t cap = 64) : r_(r), cap_(cap) {}
  void add(std::string s) {
    if (r_.violations.size() < cap_) r_.violations.push_back(std::move(s));
  }
  bool full() const { return r_.violations.size() >= cap_; }

 private:
  TableReport& r_;
  std::size_t cap_;
};

inline std::optional<CellRef> try_compose(const StrictCatTable& t, CellRef u, CellRef v, int k) {
  if (!t.composable(u, v, k)) return std::nullopt;
  if (u.dim <= t.truncation() && t.composite_entry(k, u, v) < 0) return std::nullopt;
  return t.compose_same(u, v, k);
}

}  // namespace detail

// Exhaustive check of the strict ω-category axioms at the truncation.
inline TableReport validate_strict_table(const StrictCatTable& t) {
  TableReport report;
  detail::ViolationLog log(report);
  const int n = t.truncation();
  const auto k_str = [](int k) { return std::to_string(k); };

  for (int d = 0; d < n; ++d)
    for (CellRef x : t.cells(d)) {
      const int r = t.identity_entry(x);
      if (r < 0) {
        log.add("identity of " + t.name(x) + " undefined");
        continue;
      }
      const CellRef e{d + 1, r};
      if (t.src(e) != x || t.tgt(e) != x) log.add("identity of " + t.name(x) + " has the wrong boundary");
    }
  if (!report.ok()) return report;

  for (int d = 1; d <= n; ++d)
    for (int k = 0; k < d; ++k)
      for (CellRef u : t.cells(d))
        for (CellRef v : t.cells(d)) {
          const bool ok = t.composable(u, v, k);
          const int r = t.composite_entry(k, u, v);
          const std::string tag = "(" + t.name(u) + ", " + t.name(v) + ") along " + k_str(k);
          if (ok && r < 0) {
            log.add("composite undefined for composable pair " + tag);
          } else if (!ok && r >= 0) {
            log.add("composite defined for non-composable pair " + tag);
          } else if (ok) {
            const CellRef w{d, r};
            bool good;
            if (k == d - 1) {
              good = t.src(w) == t.src(u) && t.tgt(w) == t.tgt(v);
            } else {
              const auto s = detail::try_compose(t, t.src(u), t.src(v), k);
              const auto g = detail::try_compose(t, t.tgt(u), t.tgt(v), k);
              good = s && g && t.src(w) == *s && t.tgt(w) == *g;
            }
            if (!good) log.add("composite has the wrong boundary for " + tag);
          }
        }
  if (!report.ok()) return report;

  for (int d = 1; d <= n; ++d)
    for (int k = 0; k < d; ++k)
      for (CellRef u : t.cells(d)) {
        const CellRef a = t.lift(t.boundary(u, k, Side::source), d);
        const CellRef b = t.lift(t.boundary(u, k, Side::target), d);
        if (t.compose_same(a, u, k) != u || t.compose_same(u, b, k) != u)
          log.add("unit law fails for " + t.name(u) + " along " + k_str(k));
      }

  for (int d = 1; d <= n && !log.full(); ++d)
    for (int k = 0; k < d; ++k)
      for (CellRef u : t.cells(d))
        for (CellRef v : t.cells(d)) {
          if (!t.composable(u, v, k)) continue;
          const CellRef uv = t.compose_same(u, v, k);
          for (CellRef w : t.cells(d)) {
            if (!t.composable(v, w, k)) continue;
            if (t.compose_same(uv, w, k) != t.compose_same(u, t.compose_same(v, w, k), k))
              log.add("associativity fails for (" + t.name(u) + ", " + t.name(v) + ", " + t.name(w) + ") along " + k_str(k));
          }
        }

  for (int d = 2; d <= n && !log.full(); ++d)
    for (int j = 1; j < d; ++j)
      for (int k = 0; k < j; ++k)
        for (CellRef a : t.cells(d))
          for (CellRef b : t.cells(d)) {
            if (!t.composable(a, b, j)) continue;
            const CellRef ab = t.compose_same(a, b, j);
            for (CellRef c : t.cells(d)) {
              if (!t.composable(a, c, k)) continue;
              const CellRef ac = t.compose_same(a, c, k);
              for (CellRef e : t.cells(d)) {
                if (!t.composable(c, e, j) || !t.composable(b, e, k)) continue;
                const CellRef lhs = t.compose_same(ab, t.compose_same(c, e, j), k);
                const CellRef rhs = t.compose_same(ac, t.compose_same(b, e, k), j);
                if (lhs != rhs)
                  log.add("interchange fails for (" + t.name(a) + ", " + t.name(b) + ", " + t.name(c) + ", " +
                          t.name(e) + ") along " + k_str(j) + "," + k_str(k));
              }
            }
          }

  for (int d = 1; d < n; ++d)
    for (int k = 0; k < d; ++k)
      for (CellRef u : t.cells(d))
        for (CellRef v : t.cells(d)) {
          if (!t.composable(u, v, k)) continue;
          if (t.identity_of(t.compose_same(u, v, k)) != t.compose_same(t.identity_of(u), t.identity_of(v), k))
            log.add("identity does not preserve " + t.name(u) + " *_" + k_str(k) + " " + t.name(v));
        }
  return report;
}

inline StrictCatTable strict_as_weak(StrictCatTable t) {
  const auto report = validate_strict_table(t);
  if (!report.ok()) throw ValidationError("invalid strict table: " + report.violations.front());
  return t;
}

// The hom X(x, y) of 0-cells, truncated at max(N-1, 0), with the index
// correspondence back into X.
class HomTable {
 public:
  HomTable(std::shared_ptr<const StrictCatTable> parent, CellRef x, CellRef y)
      : parent_(std::move(parent)), x_(x), y_(y) {
    const StrictCatTable& p = *parent_;
    if (x.dim != 0 || y.dim != 0 || !p.contains(x) || !p.contains(y)) throw DimensionError("hom: endpoints must be 0-cells");
    const int nh = std::max(p.truncation() - 1, 0);
    up_.resize(nh + 1);
    down_.resize(nh + 1);
    GlobularSet g(nh);
    for (int d = 0; d <= nh; ++d) {
      down_[d].assign(p.count(d + 1), -1);
      for (CellRef c : p.cells(d + 1)) {
        if (p.boundary(c, 0, Side::source) != x || p.boundary(c, 0, Side::target) != y) continue;
        int s = -1, t = -1;
        if (d >= 1) {
          s = down_[d - 1][p.src(c).index];
          t = down_[d - 1][p.tgt(c).index];
        }
        down_[d][c.index] = static_cast<int>(up_[d].size());
        up_[d].push_back(c.index);
        g.add(d, p.name(c), s, t);
      }
    }
    StrictCatTable h(std::move(g));
    for (int d = 0; d < nh; ++d)
      for (int i = 0; i < static_cast<int>(up_[d].size()); ++i) {
        const CellRef e = p.identity_of({d + 1, up_[d][i]});
        h.set_identity({d, i}, down_[d + 1][e.index]);
      }
    for (int d = 1; d <= nh; ++d)
      for (int k = 0; k < d; ++k)
        for (int i = 0; i < static_cast<int>(up_[d].size()); ++i)
          for (int j = 0; j < static_cast<int>(up_[d].size()); ++j) {
            const CellRef u{d + 1, up_[d][i]}, v{d + 1, up_[d][j]};
            if (!p.composable(u, v, k + 1)) continue;
            const int r = p.composite_entry(k + 1, u, v);
            if (r >= 0) h.set_composite(k, {d, i}, {d, j}, down_[d][r]);
          }
    table_ = std::make_shared<const StrictCatTable>(std::move(h));
  }

  const StrictCatTable& table() const { return *table_; }
  std::shared_ptr<const StrictCatTable> table_ptr() const { return table_; }
  const StrictCatTable& parent() const { return *parent_; }
  CellRef x() const { return x_; }
  CellRef y() const { return y_; }

  CellRef to_parent(CellRef c) const {
    const int nh = static_cast<int>(up_.size()) - 1;
    if (!table_->contains(c)) throw ValidationError("hom: cell out of range");
    return {c.dim + 1, up_[std::min(c.dim, nh)][c.index]};
  }

  std::optional<CellRef> from_parent(CellRef p) const {
    if (p.dim < 1 || !parent_->contains(p)) return std::nullopt;
    const int nh = static_cast<int>(up_.size()) - 1;
    const int i = down_[std::min(p.dim - 1, nh)][p.index];
    if (i < 0) return std::nullopt;
    return CellRef{p.dim - 1, i};
  }

 private:
  std::shared_ptr<const StrictCatTable> parent_;
  CellRef x_, y_;
  std::shared_ptr<const StrictCatTable> table_;
  std::vector<std::vector<int>> up_, down_;
};

// A dimension-wise map of cells, stored up to the source truncation and
// extended to formal cells by lifting.
class CellMap {
 public:
  CellMap(std::shared_ptr<const StrictCatTable> source, std::shared_ptr<const StrictCatTable> target,
          std::vector<std::vector<CellRef>> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    const int n = source_->truncation();
    if (static_cast<int>(images_.size()) != n + 1) throw ValidationError("map: images must cover dimensions 0.." + std::to_string(n));
    for (int d = 0; d <= n; ++d) {
      if (static_cast<int>(images_[d].size()) != source_->count(d))
        throw ValidationError("map: not total at dimension " + std::to_string(d), d);
      for (CellRef c : images_[d])
        if (c.dim != d || !target_->contains(c))
          throw ValidationError("map: image out of range at dimension " + std::to_string(d), d);
    }
  }

  const StrictCatTable& source() const { return *source_; }
  const StrictCatTable& target() const { return *target_; }
  std::shared_ptr<const StrictCatTable> source_ptr() const { return source_; }
  std::shared_ptr<const StrictCatTable> target_ptr() const { return target_; }
  const std::vector<std::vector<CellRef>>& images() const { return images_; }

  CellRef operator()(CellRef c) const {
    const int n = source_->truncation();
    if (!source_->contains(c)) throw ValidationError("map: cell out of range");
    if (c.dim <= n) return images_[c.dim][c.index];
    return target_->lift(images_[n][c.index], c.dim);
  }

 private:
  std::shared_ptr<const StrictCatTable> source_, target_;
  std::vector<std::vector<CellRef>> images_;
};

inline std::vector<std::string> globular_violations(const CellMap& f) {
  std::vector<std::string> out;
  const auto& X = f.source();
  const auto& Y = f.target();
  for (int d = 1; d <= X.truncation(); ++d)
    for (CellRef c : X.cells(d))
      if (Y.src(f(c)) != f(X.src(c)) || Y.tgt(f(c)) != f(X.tgt(c)))
        out.push_back("map does not commute with boundaries at " + X.name(c));
  return out;
}

inline std::vector<std::string> functor_violations(const CellMap& f) {
  auto out = globular_violations(f);
  if (!out.empty()) return out;
  const auto& X = f.source();
  const auto& Y = f.target();
  for (int d = 0; d < X.truncation(); ++d)
    for (CellRef c : X.cells(d))
      if (f(X.identity_of(c)) != Y.identity_of(f(c))) out.push_back("identity of " + X.name(c) + " not preserved");
  for (int d = 1; d <= X.truncation(); ++d)
    for (int k = 0; k < d; ++k)
      for (CellRef u : X.cells(d))
        for (CellRef v : X.cells(d)) {
          if (!X.composable(u, v, k)) continue;
          if (f(X.compose_same(u, v, k)) != Y.compose_same(f(u), f(v), k))
            out.push_back("composite " + X.name(u) + " *_" + std::to_string(k) + " " + X.name(v) + " not preserved");
        }
  return out;
}

// A cell map validated to be a strict ω-functor.
class StrictFunctor : public CellMap {
 public:
  explicit StrictFunctor(CellMap m) : CellMap(std::move(m)) {
    const auto v = functor_violations(*this);
    if (!v.empty()) throw ValidationError("not a strict functor: " + v.front());
  }

  StrictFunctor(std::shared_ptr<const StrictCatTable> source, std::shared_ptr<const StrictCatTable> target,
                std::vector<std::vector<CellRef>> images)
      : StrictFunctor(CellMap(std::move(source), std::move(target), std::move(images))) {}
};

inline CellMap tabulate_map(std::shared_ptr<const StrictCatTable> source, std::shared_ptr<const StrictCatTable> target,
                            const std::function<CellRef(CellRef)>& f) {
  std::vector<std::vector<CellRef>> images(source->truncation() + 1);
  for (int d = 0; d <= source->truncation(); ++d)
    for (CellRef c : source->cells(d)) images[d].push_back(f(c));
  return CellMap(std::move(source), std::move(target), std::move(images));
}

inline CellMap identity_map(std::shared_ptr<const StrictCatTable> t) {
  return tabulate_map(t, t, [](CellRef c) { return c; });
}

// g ∘ f.
inline CellMap compose_maps(const CellMap& f, const CellMap& g) {
  if (!(f.target() == g.source())) throw ValidationError("maps are not composable");
  return tabulate_map(f.source_ptr(), g.target_ptr(), [&](CellRef c) { return g(f(c)); });
}

inline StrictFunctor compose_functors(const StrictFunctor& f, const StrictFunctor& g) {
  return StrictFunctor(compose_maps(f, g));
}

// f_{x,x'}: X(x,x') -> Y(fx,fx').
inline CellMap induced_map(const CellMap& f, const HomTable& from, const HomTable& to) {
  if (f(from.x()) != to.x() || f(from.y()) != to.y()) throw ValidationError("induced map: hom endpoints do not match");
  return tabulate_map(from.table_ptr(), to.table_ptr(), [&](CellRef c) {
    auto r = to.from_parent(f(from.to_parent(c)));
    if (!r) throw InternalInconsistency("induced map leaves the target hom");
    return *r;
  });
}

enum class WhiskerSide { left, right };

// left:  X(u,z): X(y,z) -> X(x,z), v |-> u *_0 v   (u: x -> y)
// right: X(z,u): X(z,x) -> X(z,y), v |-> v *_0 u
inline CellMap whisker(const StrictCatTable& X, CellRef u, CellRef z, WhiskerSide side, const HomTable& from,
                       const HomTable& to) {
  if (u.dim != 1) throw DimensionError("whisker: u must be a 1-cell");
  const CellRef x = X.src(u), y = X.tgt(u);
  const bool left = side == WhiskerSide::left;
  if (left ? (from.x() != y || from.y() != z || to.x() != x || to.y() != z)
           : (from.x() != z || from.y() != x || to.x() != z || to.y() != y))
    throw BoundaryMismatch("whisker: hom endpoints do not match u and z");
  return tabulate_map(from.table_ptr(), to.table_ptr(), [&](CellRef c) {
    const CellRef v = from.to_parent(c);
    const CellRef r = left ? compose(X, u, v, 0, v.dim) : compose(X, v, u, 0, v.dim);
    auto back = to.from_parent(r);
    if (!back) throw InternalInconsistency("whiskered cell leaves the target hom");
    return *back;
  });
}

}  // namespace womega
