#pragma once

// Independent reference computations the suites compare against.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "womega/instruction.hpp"
#include "womega/pasting.hpp"
#include "womega/strict.hpp"
#include "womega/tree.hpp"

namespace womega::testing {

// The (outer / inner) table of a tree: leaf depths in order, and for each
// pair of consecutive leaves the depth of their lowest common ancestor.
inline std::pair<std::vector<int>, std::vector<int>> table_of(const Shape& t) {
  std::vector<std::vector<int>> paths;
  std::vector<int> path;
  std::function<void(const Shape&)> go = [&](const Shape& s) {
    if (s.children.empty()) paths.push_back(path);
    for (std::size_t j = 0; j < s.children.size(); ++j) {
      path.push_back(static_cast<int>(j));
      go(s.children[j]);
      path.pop_back();
    }
  };
  go(t);
  std::vector<int> outer, inner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    outer.push_back(static_cast<int>(paths[i].size()));
    if (i == 0) continue;
    const auto& a = paths[i - 1];
    const auto& b = paths[i];
    std::size_t l = 0;
    while (l < a.size() && l < b.size() && a[l] == b[l]) ++l;
    inner.push_back(static_cast<int>(l));
  }
  return {outer, inner};
}

// s_l = t_l on tables: cap every entry at l and merge the neighbours of
// every joint >= l.
inline std::pair<std::vector<int>, std::vector<int>> truncate_table(const std::vector<int>& outer,
                                                                    const std::vector<int>& inner, int l) {
  std::vector<int> o{std::min(outer[0], l)}, in;
  for (std::size_t i = 1; i < outer.size(); ++i) {
    if (inner[i - 1] >= l) continue;
    in.push_back(inner[i - 1]);
    o.push_back(std::min(outer[i], l));
  }
  return {o, in};
}

// Hom([d], [n]) in the globe category, enumerated as words in sigma/tau of
// length n - d and quotiented by the globular relations, which identify two
// words exactly when their first letters agree.
inline int globe_hom_count(int d, int n) {
  if (d > n) return 0;
  if (d == n) return 1;
  std::set<std::string> classes;
  const int len = n - d;
  for (int w = 0; w < (1 << len); ++w) {
    std::string word;
    for (int i = 0; i < len; ++i) word += (w >> i) & 1 ? 't' : 's';
    for (std::size_t i = 1; i < word.size(); ++i) word[i] = 's';
    classes.insert(word);
  }
  return static_cast<int>(classes.size());
}

// One outermost (pre-order) rewrite step with R1, R2 or R3, grafting raw
// terms without normalizing them.
inline std::optional<Instruction> rewrite_step(const Instruction& t) {
  using K = Instruction::Kind;
  switch (t.kind()) {
    case K::unit:
      return std::nullopt;
    case K::contract: {
      if (auto s = rewrite_step(t.src())) return Instruction::make_contract(*s, t.tgt(), t.scheme());
      if (auto s = rewrite_step(t.tgt())) return Instruction::make_contract(t.src(), *s, t.scheme());
      return std::nullopt;
    }
    case K::compose: {
      const Instruction& h = t.head();
      const auto& b = t.args();
      const bool units = all_labels(b.tree, [](const Instruction& x, int d) { return x.kind() == K::unit && x.dim() == d; });
      if (units) return h;
      if (h.kind() == K::unit) return rightmost_leaf(b.tree);
      if (h.kind() == K::compose) {
        const auto& a = h.args();
        auto nested = map_tree(a.tree, [](const Instruction& x, int) { return x.arity().tree; });
        auto pieces = decompose_tree(b.tree, nested);
        auto grafted = zip_labels(a.tree, pieces, [](const Instruction& x, const Tree<Instruction>& p, int d) {
          return Instruction::make_compose(x, PastingDiagram<Instruction>{p, d});
        });
        return Instruction::make_compose(h.head(), PastingDiagram<Instruction>{std::move(grafted), a.dim});
      }
      if (auto s = rewrite_step(h)) return Instruction::make_compose(*s, b);
      // First rewritable label in pre-order.
      bool done = false;
      auto args = map_tree(b.tree, [&](const Instruction& x, int) {
        if (done) return x;
        if (auto s = rewrite_step(x)) {
          done = true;
          return *s;
        }
        return x;
      });
      if (!done) return std::nullopt;
      return Instruction::make_compose(h, PastingDiagram<Instruction>{std::move(args), b.dim});
    }
  }
  return std::nullopt;
}

struct RewriteResult {
  Instruction normal;
  int steps = 0;
};

inline RewriteResult normalize_outermost(Instruction t, int max_steps = 100000) {
  int steps = 0;
  while (auto s = rewrite_step(t)) {
    t = *s;
    if (++steps > max_steps) throw InternalInconsistency("outermost rewriting did not terminate");
  }
  return {t, steps};
}

// Brute-force isomorphisms of a 1-truncated table: f has a two-sided inverse.
inline bool is_iso(const StrictCatTable& t, CellRef f) {
  const CellRef x = t.src(f), y = t.tgt(f);
  for (CellRef g : t.cells(1)) {
    if (t.src(g) != y || t.tgt(g) != x) continue;
    if (t.compose_same(f, g, 0) == t.identity_of(x) && t.compose_same(g, f, 0) == t.identity_of(y)) return true;
  }
  return false;
}

inline bool isomorphic(const StrictCatTable& t, CellRef x, CellRef y) {
  if (x == y) return true;
  for (CellRef f : t.cells(1))
    if (t.src(f) == x && t.tgt(f) == y && is_iso(t, f)) return true;
  return false;
}

struct FolkVerdict {
  bool ess_surjective = true, full = true, faithful = true;
  bool equivalence() const { return ess_surjective && full && faithful; }
};

// Equivalence of categories, checked directly on hom-sets.
inline FolkVerdict folk_equivalence(const CellMap& f) {
  const StrictCatTable& A = f.source();
  const StrictCatTable& B = f.target();
  FolkVerdict v;
  for (CellRef y : B.cells(0)) {
    bool hit = false;
    for (CellRef x : A.cells(0)) hit = hit || isomorphic(B, f(x), y);
    v.ess_surjective = v.ess_surjective && hit;
  }
  for (CellRef x : A.cells(0))
    for (CellRef x2 : A.cells(0)) {
      std::set<int> image;
      int count = 0;
      for (CellRef a : A.cells(1))
        if (A.src(a) == x && A.tgt(a) == x2) {
          image.insert(f(a).index);
          ++count;
        }
      v.faithful = v.faithful && static_cast<int>(image.size()) == count;
      for (CellRef b : B.cells(1))
        if (B.src(b) == f(x) && B.tgt(b) == f(x2) && !image.count(b.index)) v.full = false;
    }
  return v;
}

// Strict evaluation folding every node from the right: c0 *_h (c1 *_h (...)).
inline CellRef right_fold_eval(const StrictCatTable& t, const PastingDiagram<CellRef>& u) {
  std::function<CellRef(const Tree<CellRef>&, int)> go = [&](const Tree<CellRef>& s, int h) -> CellRef {
    if (s.children.empty()) return t.lift(s.labels.front(), u.dim);
    CellRef acc = go(s.children.back(), h + 1);
    for (std::size_t j = s.children.size() - 1; j-- > 0;) acc = t.compose_same(go(s.children[j], h + 1), acc, h);
    return acc;
  };
  return go(u.tree, 0);
}

}  // namespace womega::testing
