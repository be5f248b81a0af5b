#pragma once

// Labelled planar trees: the canonical form of pasting schemes and diagrams.
//
// A node at height d with c children carries c+1 labels of dimension d (the
// "gaps"); child j sits between labels j and j+1 of its parent. A leaf carries
// exactly one label. Unlabelled shapes use Blank.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "womega/errors.hpp"

namespace womega {

enum class Side { source, target };

struct Blank {
  friend bool operator==(Blank, Blank) { return true; }
};

template <class L>
struct Tree {
  std::vector<L> labels;
  std::vector<Tree> children;

  bool operator==(const Tree& o) const {
    return labels == o.labels && children == o.children;
  }
};

using Shape = Tree<Blank>;

template <class L>
Tree<L> leaf(L x) {
  Tree<L> t;
  t.labels.push_back(std::move(x));
  return t;
}

template <class L>
int height(const Tree<L>& t) {
  int h = 0;
  for (const auto& c : t.children) h = std::max(h, 1 + height(c));
  return h;
}

template <class L>
std::size_t node_count(const Tree<L>& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += node_count(c);
  return n;
}

// f(label, height) -> M
template <class L, class F>
auto map_tree(const Tree<L>& t, F&& f, int h = 0)
    -> Tree<std::decay_t<decltype(f(t.labels.front(), h))>> {
  using M = std::decay_t<decltype(f(t.labels.front(), h))>;
  Tree<M> out;
  out.labels.reserve(t.labels.size());
  for (const auto& x : t.labels) out.labels.push_back(f(x, h));
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(map_tree(c, f, h + 1));
  return out;
}

template <class L>
Shape shape_of(const Tree<L>& t) {
  return map_tree(t, [](const L&, int) { return Blank{}; });
}

// f(label, height)
template <class L, class F>
void for_each_label(const Tree<L>& t, F&& f, int h = 0) {
  for (const auto& x : t.labels) f(x, h);
  for (const auto& c : t.children) for_each_label(c, f, h + 1);
}

template <class L, class P>
bool all_labels(const Tree<L>& t, P&& p, int h = 0) {
  for (const auto& x : t.labels)
    if (!p(x, h)) return false;
  for (const auto& c : t.children)
    if (!all_labels(c, p, h + 1)) return false;
  return true;
}

// Leftmost / rightmost leaf label of a subtree.
template <class L>
const L& leftmost_leaf(const Tree<L>& t) {
  const Tree<L>* p = &t;
  while (!p->children.empty()) p = &p->children.front();
  return p->labels.front();
}

template <class L>
const L& rightmost_leaf(const Tree<L>& t) {
  const Tree<L>* p = &t;
  while (!p->children.empty()) p = &p->children.back();
  return p->labels.front();
}

// Linear chain root -> ... -> leaf at height h.
inline Shape chain_shape(int h) {
  Shape t = leaf(Blank{});
  for (int i = 0; i < h; ++i) {
    Shape p;
    p.labels = {Blank{}, Blank{}};
    p.children.push_back(std::move(t));
    t = std::move(p);
  }
  return t;
}

// Cut at height `level`: nodes there lose their children and keep their
// first (source) or last (target) label.
template <class L>
Tree<L> truncate(const Tree<L>& t, int level, Side side) {
  if (level == 0) return leaf(side == Side::source ? t.labels.front() : t.labels.back());
  Tree<L> out;
  out.labels = t.labels;
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(truncate(c, level - 1, side));
  return out;
}

namespace detail {

inline std::string path_string(const std::vector<int>& path) {
  std::string s = "root";
  for (int i : path) s += "/" + std::to_string(i);
  return s;
}

template <class L>
Tree<L> zip(const Tree<L>& a, const Tree<L>& b, int k, std::vector<int>& path) {
  Tree<L> out;
  if (k == 0) {
    if (!(a.labels.back() == b.labels.front()))
      throw BoundaryMismatch("glue: boundary labels disagree at " + path_string(path));
    out.labels = a.labels;
    out.labels.insert(out.labels.end(), b.labels.begin() + 1, b.labels.end());
    out.children = a.children;
    out.children.insert(out.children.end(), b.children.begin(), b.children.end());
    return out;
  }
  if (a.children.size() != b.children.size())
    throw BoundaryMismatch("glue: boundary shapes disagree at " + path_string(path));
  if (!(a.labels == b.labels))
    throw BoundaryMismatch("glue: boundary labels disagree at " + path_string(path));
  out.labels = a.labels;
  out.children.reserve(a.children.size());
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    out.children.push_back(zip(a.children[i], b.children[i], k - 1, path));
    path.pop_back();
  }
  return out;
}

template <class L>
bool same_root_labels(const Tree<Tree<L>>& c, const std::vector<L>& path) {
  return all_labels(c, [&](const Tree<L>& d, int) { return d.labels == path; });
}

template <class L>
Tree<Tree<L>> take_child(const Tree<Tree<L>>& c, std::size_t a) {
  return map_tree(c, [a](const Tree<L>& d, int) { return d.children[a]; });
}

template <class L>
void assemble(const Shape& pos, const std::vector<const Tree<Tree<L>>*>& subs,
              const std::vector<L>& path, Tree<Tree<L>>& out) {
  out.labels.resize(pos.labels.size());
  for (std::size_t g = 0; g < pos.labels.size(); ++g) {
    Tree<L>& d = out.labels[g];
    d.labels = path;
    d.children.reserve(subs.size());
    for (const auto* s : subs) d.children.push_back(s->labels[g]);
  }
  out.children.resize(pos.children.size());
  for (std::size_t j = 0; j < pos.children.size(); ++j) {
    std::vector<const Tree<Tree<L>>*> next;
    next.reserve(subs.size());
    for (const auto* s : subs) next.push_back(&s->children[j]);
    assemble(pos.children[j], next, path, out.children[j]);
  }
}

}  // namespace detail

// Zip-concatenation along height k. The two trees must agree strictly below
// height k; there a's last label must equal b's first.
template <class L>
Tree<L> zip_glue(const Tree<L>& a, const Tree<L>& b, int k) {
  std::vector<int> path;
  return detail::zip(a, b, k, path);
}

// Multiplication of the free strict ω-category monad on trees. A node of the
// outer tree at height d is labelled by a tree of height <= d.
template <class L>
Tree<L> flatten_tree(const Tree<Tree<L>>& outer) {
  auto point = [](const Tree<L>& t) -> const L& {
    if (!t.children.empty() || t.labels.size() != 1)
      throw BoundaryMismatch("flatten: a 0-dimensional label is not a point");
    return t.labels.front();
  };
  Tree<L> out;
  out.labels.push_back(point(outer.labels.front()));
  for (std::size_t j = 0; j < outer.children.size(); ++j) {
    const auto& c = outer.children[j];
    const std::vector<L>& path = c.labels.front().labels;
    if (!(path.front() == out.labels.back()) || !(path.back() == point(outer.labels[j + 1])))
      throw BoundaryMismatch("flatten: inner label endpoints disagree with outer gaps");
    if (!detail::same_root_labels(c, path))
      throw BoundaryMismatch("flatten: inner labels of one column have different 0-paths");
    for (std::size_t a = 0; a + 1 < path.size(); ++a) {
      out.children.push_back(flatten_tree(detail::take_child(c, a)));
      out.labels.push_back(path[a + 1]);
    }
  }
  return out;
}

// Inverse of flatten along a nested shape: splits b (of shape
// flatten(nested)) into one piece per position of the outer tree.
template <class L>
Tree<Tree<L>> decompose_tree(const Tree<L>& b, const Tree<Shape>& nested) {
  Tree<Tree<L>> out;
  out.labels.resize(nested.labels.size());
  out.children.resize(nested.children.size());
  std::size_t off = 0;
  out.labels[0] = leaf(b.labels.at(0));
  for (std::size_t j = 0; j < nested.children.size(); ++j) {
    const Tree<Shape>& c = nested.children[j];
    const std::size_t q = c.labels.front().children.size();
    if (off + q > b.children.size())
      throw BoundaryMismatch("decompose: shape does not match the nested arity");
    std::vector<Tree<Tree<L>>> subs;
    subs.reserve(q);
    for (std::size_t a = 0; a < q; ++a)
      subs.push_back(decompose_tree(b.children[off + a], detail::take_child(c, a)));
    std::vector<const Tree<Tree<L>>*> ptrs;
    for (const auto& s : subs) ptrs.push_back(&s);
    std::vector<L> path(b.labels.begin() + static_cast<std::ptrdiff_t>(off),
                        b.labels.begin() + static_cast<std::ptrdiff_t>(off + q + 1));
    detail::assemble(shape_of(c), ptrs, path, out.children[j]);
    off += q;
    out.labels[j + 1] = leaf(b.labels.at(off));
  }
  if (off != b.children.size() || off + 1 != b.labels.size())
    throw BoundaryMismatch("decompose: shape does not match the nested arity");
  return out;
}

// Pairs the labels of two trees of equal shape.
template <class A, class B, class F>
auto zip_labels(const Tree<A>& a, const Tree<B>& b, F&& f, int h = 0)
    -> Tree<std::decay_t<decltype(f(a.labels.front(), b.labels.front(), h))>> {
  using M = std::decay_t<decltype(f(a.labels.front(), b.labels.front(), h))>;
  if (a.labels.size() != b.labels.size() || a.children.size() != b.children.size())
    throw BoundaryMismatch("zip_labels: shapes differ");
  Tree<M> out;
  for (std::size_t i = 0; i < a.labels.size(); ++i) out.labels.push_back(f(a.labels[i], b.labels[i], h));
  for (std::size_t i = 0; i < a.children.size(); ++i)
    out.children.push_back(zip_labels(a.children[i], b.children[i], f, h + 1));
  return out;
}

}  // namespace womega
