#pragma once

// Finite globular sets truncated at a level N.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "womega/errors.hpp"
#include "womega/tree.hpp"

namespace womega {

struct CellRef {
  int dim = 0;
  int index = 0;
  auto operator<=>(const CellRef&) const = default;
};

class GlobularSet {
 public:
  using cell_type = CellRef;

  GlobularSet() : names_(1), src_(1), tgt_(1) {}

  explicit GlobularSet(int truncation) : names_(truncation + 1), src_(truncation + 1), tgt_(truncation + 1) {
    if (truncation < 0) throw ValidationError("globular set: negative truncation");
  }

  // Validating constructor. src[d], tgt[d] (d >= 1) index dimension d-1 cells;
  // src[0], tgt[0] are ignored.
  static GlobularSet make(std::vector<std::vector<std::string>> names,
                          std::vector<std::vector<int>> src, std::vector<std::vector<int>> tgt) {
    if (names.empty()) throw ValidationError("globular set: no dimensions");
    const int n = static_cast<int>(names.size()) - 1;
    src.resize(names.size());
    tgt.resize(names.size());
    GlobularSet g(n);
    for (int d = 0; d <= n; ++d) {
      if (d >= 1 && (src[d].size() != names[d].size() || tgt[d].size() != names[d].size()))
        throw ValidationError("globular set: src/tgt not total at dimension " + std::to_string(d), d);
      for (std::size_t i = 0; i < names[d].size(); ++i)
        g.add(d, names[d][i], d == 0 ? -1 : src[d][i], d == 0 ? -1 : tgt[d][i]);
    }
    return g;
  }

  // Appends a cell; dimension may exceed the truncation by one, raising it.
  CellRef add(int d, std::string name, int s = -1, int t = -1) {
    if (d < 0 || d > truncation() + 1) throw DimensionError("globular set: cannot add a cell of dimension " + std::to_string(d));
    if (find(d, name)) throw ValidationError("globular set: duplicate name '" + name + "' in dimension " + std::to_string(d));
    if (d >= 1) {
      const int below = count(d - 1);
      if (s < 0 || s >= below || t < 0 || t >= below)
        throw ValidationError("globular set: cell '" + name + "' references a missing boundary cell");
      if (d >= 2) {
        const CellRef a{d - 1, s}, b{d - 1, t};
        if (src(a) != src(b) || tgt(a) != tgt(b))
          throw ValidationError("globular set: cell '" + name + "' violates globularity");
      }
    }
    if (d == truncation() + 1) {
      names_.emplace_back();
      src_.emplace_back();
      tgt_.emplace_back();
    }
    names_[d].push_back(std::move(name));
    src_[d].push_back(s);
    tgt_[d].push_back(t);
    return {d, count(d) - 1};
  }

  int truncation() const { return static_cast<int>(names_.size()) - 1; }

  int count(int d) const {
    return d >= 0 && d <= truncation() ? static_cast<int>(names_[d].size()) : 0;
  }

  bool contains(CellRef c) const { return c.dim >= 0 && c.dim <= truncation() && c.index >= 0 && c.index < count(c.dim); }

  int dim(CellRef c) const { return c.dim; }

  const std::string& name(CellRef c) const {
    check(c);
    return names_[c.dim][c.index];
  }

  std::optional<CellRef> find(int d, std::string_view name) const {
    if (d < 0 || d > truncation()) return std::nullopt;
    for (int i = 0; i < count(d); ++i)
      if (names_[d][i] == name) return CellRef{d, i};
    return std::nullopt;
  }

  CellRef src(CellRef c) const {
    check(c);
    if (c.dim == 0) throw DimensionError("src of a 0-cell");
    return {c.dim - 1, src_[c.dim][c.index]};
  }

  CellRef tgt(CellRef c) const {
    check(c);
    if (c.dim == 0) throw DimensionError("tgt of a 0-cell");
    return {c.dim - 1, tgt_[c.dim][c.index]};
  }

  CellRef boundary(CellRef c, int l, Side side) const {
    check(c);
    if (l < 0 || l > c.dim) throw DimensionError("boundary: level " + std::to_string(l) + " above dimension " + std::to_string(c.dim));
    if (l == c.dim) return c;
    while (c.dim > l) c = side == Side::source ? src(c) : tgt(c);
    return c;
  }

  bool parallel(CellRef u, CellRef v) const {
    check(u);
    check(v);
    if (u.dim != v.dim) throw DimensionError("parallel: cells of different dimensions");
    return u.dim == 0 || (src(u) == src(v) && tgt(u) == tgt(v));
  }

  std::vector<CellRef> cells(int d) const {
    std::vector<CellRef> out;
    for (int i = 0; i < count(d); ++i) out.push_back({d, i});
    return out;
  }

  const std::vector<std::vector<std::string>>& names() const { return names_; }

  bool operator==(const GlobularSet&) const = default;

 private:
  void check(CellRef c) const {
    if (!contains(c)) throw ValidationError("cell reference out of range");
  }

  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> src_, tgt_;
};

// The representable n-globe: cells s_d, t_d below n and one top cell x.
inline GlobularSet globe(int n) {
  if (n < 0) throw DimensionError("globe: negative dimension");
  GlobularSet g(0);
  if (n == 0) {
    g.add(0, "x");
    return g;
  }
  g.add(0, "s0");
  g.add(0, "t0");
  for (int d = 1; d < n; ++d) {
    g.add(d, "s" + std::to_string(d), 0, 1);
    g.add(d, "t" + std::to_string(d), 0, 1);
  }
  g.add(n, "x", 0, 1);
  return g;
}

inline GlobularSet globe_boundary(int n) {
  if (n < 0) throw DimensionError("globe_boundary: negative dimension");
  if (n == 0) return GlobularSet();
  GlobularSet g(0);
  g.add(0, "s0");
  g.add(0, "t0");
  for (int d = 1; d < n; ++d) {
    g.add(d, "s" + std::to_string(d), 0, 1);
    g.add(d, "t" + std::to_string(d), 0, 1);
  }
  return g;
}

}  // namespace womega
