#pragma once

// Pasting schemes (cells of T1) and pasting diagrams (cells of TX).
//
// Both are stored as labelled planar trees with an explicit ambient
// dimension; the (outer / inner) table is a derived view.

#include <concepts>
#include <functional>
#include <type_traits>
#include <string>
#include <vector>

#include "womega/errors.hpp"
#include "womega/globset.hpp"
#include "womega/tree.hpp"

namespace womega {

// Anything whose cells have a dimension and iterated boundaries.
template <class H>
concept GlobularHost = requires(const H& h, const typename H::cell_type& c, int l, Side s) {
  { h.dim(c) } -> std::convertible_to<int>;
  { h.boundary(c, l, s) } -> std::convertible_to<typename H::cell_type>;
};

namespace detail {

// Visits leaves (entries) and the gaps between consecutive leaves (joints)
// in table order.
template <class L, class E, class J>
void walk_table(const Tree<L>& t, int h, E&& entry, J&& joint) {
  if (t.children.empty()) {
    entry(h, t.labels.front());
    return;
  }
  for (std::size_t j = 0; j < t.children.size(); ++j) {
    if (j > 0) joint(h, t.labels[j]);
    walk_table(t.children[j], h + 1, entry, joint);
  }
}

// Subtree rooted at height h holding leaves first..last of the table.
template <class L, class Bd>
Tree<L> build_from_table(const std::vector<int>& outer, const std::vector<int>& inner,
                         const std::vector<L>& entries, const std::vector<L>& joints,
                         int h, std::size_t first, std::size_t last, Bd&& bd) {
  Tree<L> t;
  if (first == last && outer[first] == h) {
    t.labels.push_back(entries[first]);
    return t;
  }
  t.labels.push_back(bd(entries[first], h, Side::source));
  std::size_t begin = first;
  for (std::size_t m = first + 1; m <= last; ++m) {
    if (inner[m - 1] == h) {
      t.children.push_back(build_from_table(outer, inner, entries, joints, h + 1, begin, m - 1, bd));
      t.labels.push_back(joints[m - 1]);
      begin = m;
    }
  }
  t.children.push_back(build_from_table(outer, inner, entries, joints, h + 1, begin, last, bd));
  t.labels.push_back(bd(entries[last], h, Side::target));
  return t;
}

inline void check_table(const std::vector<int>& outer, const std::vector<int>& inner, int n) {
  if (outer.empty()) throw ValidationError("pasting scheme: empty outer list");
  if (inner.size() + 1 != outer.size())
    throw ValidationError("pasting scheme: expected " + std::to_string(outer.size() - 1) +
                          " inner entries, got " + std::to_string(inner.size()));
  if (n < 0) throw ValidationError("pasting scheme: negative ambient dimension");
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (outer[i] < 0 || outer[i] > n)
      throw ValidationError("pasting scheme: k_" + std::to_string(i) + " = " + std::to_string(outer[i]) +
                                " outside [0, " + std::to_string(n) + "]",
                            static_cast<int>(i));
  for (std::size_t i = 1; i < outer.size(); ++i) {
    const int j = inner[i - 1];
    if (j < 0 || !(outer[i - 1] > j && j < outer[i]))
      throw ValidationError("pasting scheme: constraint k_{i-1} > k_i' < k_i fails at i = " + std::to_string(i),
                            static_cast<int>(i));
  }
}

}  // namespace detail

struct PastingScheme {
  Shape tree = leaf(Blank{});
  int dim = 0;

  std::vector<int> outer() const {
    std::vector<int> out;
    detail::walk_table(tree, 0, [&](int h, Blank) { out.push_back(h); }, [](int, Blank) {});
    return out;
  }

  std::vector<int> inner() const {
    std::vector<int> out;
    detail::walk_table(tree, 0, [](int, Blank) {}, [&](int h, Blank) { out.push_back(h); });
    return out;
  }

  bool operator==(const PastingScheme&) const = default;
};

inline PastingScheme validate_scheme(const std::vector<int>& outer, const std::vector<int>& inner, int n) {
  detail::check_table(outer, inner, n);
  std::vector<Blank> blanks(outer.size());
  std::vector<Blank> jblanks(inner.size());
  auto bd = [](Blank, int, Side) { return Blank{}; };
  return {detail::build_from_table(outer, inner, blanks, jblanks, 0, 0, outer.size() - 1, bd), n};
}

inline const Shape& scheme_to_tree(const PastingScheme& k) { return k.tree; }

inline PastingScheme tree_to_scheme(const Shape& t, int n) {
  if (height(t) > n)
    throw DimensionError("tree of height " + std::to_string(height(t)) + " exceeds ambient dimension " +
                         std::to_string(n));
  std::function<void(const Shape&)> check = [&](const Shape& s) {
    if (s.labels.size() != s.children.size() + 1) throw ValidationError("tree: label count must be children + 1");
    for (const auto& c : s.children) check(c);
  };
  check(t);
  return {t, n};
}

// [m]^{(n)}
inline PastingScheme globe_scheme(int m, int n) {
  if (m < 0 || m > n) throw DimensionError("globe scheme [" + std::to_string(m) + "]@" + std::to_string(n));
  return {chain_shape(m), n};
}

// Source and target coincide over the terminal globular set.
inline PastingScheme scheme_boundary(const PastingScheme& k, int l, Side side = Side::source) {
  if (l < 0 || l >= k.dim)
    throw DimensionError("scheme_boundary: level " + std::to_string(l) + " not below ambient " +
                         std::to_string(k.dim));
  return {truncate(k.tree, l, side), l};
}

inline PastingScheme degenerate(const PastingScheme& k, int n) {
  if (n < k.dim) throw DimensionError("degenerate: target dimension below ambient");
  return {k.tree, n};
}

inline bool is_globe(const PastingScheme& k) { return k.tree == chain_shape(k.dim); }

inline std::string to_string(const PastingScheme& k) {
  std::string s = "[";
  const auto o = k.outer();
  const auto in = k.inner();
  for (std::size_t i = 0; i < o.size(); ++i) s += (i ? " " : "") + std::to_string(o[i]);
  if (!in.empty()) {
    s += " /";
    for (int j : in) s += " " + std::to_string(j);
  }
  return s + "]@" + std::to_string(k.dim);
}

template <class L>
struct PastingDiagram {
  Tree<L> tree;
  int dim = 0;

  PastingScheme shape() const { return {shape_of(tree), dim}; }

  std::vector<L> entries() const {
    std::vector<L> out;
    detail::walk_table(tree, 0, [&](int, const L& x) { out.push_back(x); }, [](int, const L&) {});
    return out;
  }

  std::vector<L> joints() const {
    std::vector<L> out;
    detail::walk_table(tree, 0, [](int, const L&) {}, [&](int, const L& x) { out.push_back(x); });
    return out;
  }

  bool operator==(const PastingDiagram& o) const { return dim == o.dim && tree == o.tree; }
};

template <class L, class F>
auto map_diagram(const PastingDiagram<L>& u, F&& f)
    -> PastingDiagram<std::decay_t<decltype(f(u.tree.labels.front()))>> {
  return {map_tree(u.tree, [&](const L& x, int) { return f(x); }), u.dim};
}

// Throws ValidationError unless every label has the dimension of its node and
// its boundary matches the neighbouring gaps of its parent.
template <GlobularHost H>
void check_diagram(const H& host, const PastingDiagram<typename H::cell_type>& u) {
  using C = typename H::cell_type;
  if (height(u.tree) > u.dim) throw ValidationError("diagram: tree height exceeds ambient dimension");
  std::function<void(const Tree<C>&, int, const C*, const C*)> go = [&](const Tree<C>& t, int h, const C* lo,
                                                                        const C* hi) {
    if (t.labels.size() != t.children.size() + 1) throw ValidationError("diagram: label count must be children + 1");
    for (const C& x : t.labels) {
      if (host.dim(x) != h)
        throw ValidationError("diagram: label of dimension " + std::to_string(host.dim(x)) + " at height " +
                              std::to_string(h));
      if (h >= 1 && (!(host.boundary(x, h - 1, Side::source) == *lo) || !(host.boundary(x, h - 1, Side::target) == *hi)))
        throw ValidationError("diagram: label at height " + std::to_string(h) + " does not fit its gaps");
    }
    for (std::size_t j = 0; j < t.children.size(); ++j) go(t.children[j], h + 1, &t.labels[j], &t.labels[j + 1]);
  };
  go(u.tree, 0, nullptr, nullptr);
}

template <GlobularHost H>
PastingDiagram<typename H::cell_type> validate_diagram(const H& host, const PastingScheme& k,
                                                       const std::vector<typename H::cell_type>& entries,
                                                       const std::vector<typename H::cell_type>& joints) {
  const auto outer = k.outer();
  const auto inner = k.inner();
  if (entries.size() != outer.size() || joints.size() != inner.size())
    throw ValidationError("diagram: expected " + std::to_string(outer.size()) + " entries and " +
                          std::to_string(inner.size()) + " joints");
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (host.dim(entries[i]) != outer[i])
      throw ValidationError("diagram: entry " + std::to_string(i) + " has dimension " +
                                std::to_string(host.dim(entries[i])) + ", expected " + std::to_string(outer[i]),
                            static_cast<int>(i));
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const int j = inner[i - 1];
    if (host.dim(joints[i - 1]) != j)
      throw ValidationError("diagram: joint " + std::to_string(i) + " has the wrong dimension", static_cast<int>(i));
    if (!(host.boundary(entries[i - 1], j, Side::target) == joints[i - 1]) ||
        !(host.boundary(entries[i], j, Side::source) == joints[i - 1]))
      throw ValidationError("diagram: joint mismatch at i = " + std::to_string(i), static_cast<int>(i));
  }
  auto bd = [&](const auto& x, int l, Side s) { return host.boundary(x, l, s); };
  PastingDiagram<typename H::cell_type> u{
      detail::build_from_table(outer, inner, entries, joints, 0, 0, outer.size() - 1, bd), k.dim};
  check_diagram(host, u);
  return u;
}

// [x]^{(n)}
template <GlobularHost H>
PastingDiagram<typename H::cell_type> unit_diagram(const H& host, const typename H::cell_type& x, int n) {
  using C = typename H::cell_type;
  const int m = host.dim(x);
  if (m > n) throw DimensionError("unit_diagram: cell dimension exceeds ambient");
  Tree<C> t = leaf(x);
  for (int d = m - 1; d >= 0; --d) {
    Tree<C> p;
    p.labels = {host.boundary(x, d, Side::source), host.boundary(x, d, Side::target)};
    p.children.push_back(std::move(t));
    t = std::move(p);
  }
  return {std::move(t), n};
}

template <class L>
PastingDiagram<L> degenerate(const PastingDiagram<L>& u, int n) {
  if (n < u.dim) throw DimensionError("degenerate: target dimension below ambient");
  return {u.tree, n};
}

template <class L>
PastingDiagram<L> diagram_boundary(const PastingDiagram<L>& u, int l, Side side) {
  if (l < 0 || l >= u.dim)
    throw DimensionError("diagram_boundary: level " + std::to_string(l) + " not below ambient " +
                         std::to_string(u.dim));
  return {truncate(u.tree, l, side), l};
}

// u *_{k,n} v in TX.
template <class L>
PastingDiagram<L> glue(const PastingDiagram<L>& u, int k, const PastingDiagram<L>& v, int n) {
  if (k < 0 || k >= u.dim || k >= v.dim || u.dim > n || v.dim > n)
    throw DimensionError("glue: need k < dims <= n (k=" + std::to_string(k) + ", dims " + std::to_string(u.dim) +
                         "," + std::to_string(v.dim) + ", n=" + std::to_string(n) + ")");
  return {zip_glue(u.tree, v.tree, k), n};
}

// The free-strict-ω-category host on a label type: cells are diagrams.
template <class L>
struct DiagramHost {
  using cell_type = PastingDiagram<L>;
  int dim(const cell_type& u) const { return u.dim; }
  cell_type boundary(const cell_type& u, int l, Side s) const {
    if (l == u.dim) return u;
    return diagram_boundary(u, l, s);
  }
};

// mu^T: an outer diagram whose labels are diagrams.
template <class L>
PastingDiagram<L> flatten(const PastingDiagram<PastingDiagram<L>>& outer) {
  if (!all_labels(outer.tree, [](const PastingDiagram<L>& d, int h) { return d.dim == h; }))
    throw DimensionError("flatten: an inner diagram's dimension differs from its position");
  auto inner = map_tree(outer.tree, [](const PastingDiagram<L>& d, int) { return d.tree; });
  return {flatten_tree(inner), outer.dim};
}

}  // namespace womega
