#pragma once

#include <initializer_list>
#include <vector>

#include "womega/globset.hpp"
#include "womega/pasting.hpp"
#include "womega/tree.hpp"

namespace fixtures {

using namespace womega;

// A node with the given children; labels are blank.
inline Shape node(std::vector<Shape> children = {}) {
  Shape s;
  s.labels.assign(children.size() + 1, Blank{});
  s.children = std::move(children);
  return s;
}

// 0-cells a b c d; 1-cells f g: a -> b, h: b -> c, i j k: c -> d;
// 2-cells alpha: f => g, beta: i => j, gamma: j => k.
inline GlobularSet figure_set() {
  GlobularSet g(0);
  for (const char* x : {"a", "b", "c", "d"}) g.add(0, x);
  g.add(1, "f", 0, 1);
  g.add(1, "g", 0, 1);
  g.add(1, "h", 1, 2);
  g.add(1, "i", 2, 3);
  g.add(1, "j", 2, 3);
  g.add(1, "k", 2, 3);
  g.add(2, "alpha", 0, 1);
  g.add(2, "beta", 3, 4);
  g.add(2, "gamma", 4, 5);
  return g;
}

inline CellRef cell(const GlobularSet& g, int d, const char* name) { return *g.find(d, name); }

inline PastingScheme figure_scheme() { return validate_scheme({2, 1, 2, 2}, {0, 0, 1}, 2); }

inline PastingDiagram<CellRef> figure_diagram(const GlobularSet& g) {
  return validate_diagram(g, figure_scheme(),
                          {cell(g, 2, "alpha"), cell(g, 1, "h"), cell(g, 2, "beta"), cell(g, 2, "gamma")},
                          {cell(g, 0, "b"), cell(g, 0, "c"), cell(g, 1, "j")});
}

}  // namespace fixtures
