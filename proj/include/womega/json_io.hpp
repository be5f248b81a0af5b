#pragma once

// JSON encodings. Cells are referenced by name within their dimension.
//
//   GlobularSet    {"truncation": N, "cells": [[names of dim 0], ..., [dim N]],
//                   "src": [[dim 1 sources], ..., [dim N]], "tgt": [...]}
//   StrictCatTable GlobularSet fields plus
//                   "id":   [[identity of each dim d cell], ...]          d < N
//                   "comp": [{"k": k, "dim": d, "table": [[u, v, u*_k v], ...]}, ...]
//   StrictFunctor  {"source": table, "target": table, "map": [[image per cell], ...]}

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "womega/equiv.hpp"
#include "womega/errors.hpp"
#include "womega/globset.hpp"
#include "womega/strict.hpp"

namespace womega {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("json: missing field \"") + key + "\"");
  return j.at(key);
}

inline const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw ValidationError(std::string("json: field \"") + key + "\" must be an array");
  return a;
}

inline std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError("json: " + where + " must be a cell name");
  return j.get<std::string>();
}

inline int lookup_name(const GlobularSet& g, int d, const json& j, const std::string& where) {
  const std::string n = str(j, where);
  auto c = g.find(d, n);
  if (!c) throw ValidationError("json: " + where + ": no cell '" + n + "' in dimension " + std::to_string(d), d);
  return c->index;
}

inline CellRef table_cell(const StrictCatTable& t, int d, const json& j, const std::string& where) {
  const std::string n = str(j, where);
  auto c = t.find(d, n);
  if (!c) throw ValidationError("json: " + where + ": no cell '" + n + "' in dimension " + std::to_string(d), d);
  return *c;
}

}  // namespace detail

inline json to_json(const GlobularSet& g) {
  json cells = json::array(), src = json::array(), tgt = json::array();
  for (int d = 0; d <= g.truncation(); ++d) {
    json names = json::array(), s = json::array(), t = json::array();
    for (int i = 0; i < g.count(d); ++i) {
      const CellRef c{d, i};
      names.push_back(g.name(c));
      if (d >= 1) {
        s.push_back(g.name(g.src(c)));
        t.push_back(g.name(g.tgt(c)));
      }
    }
    cells.push_back(names);
    if (d >= 1) {
      src.push_back(s);
      tgt.push_back(t);
    }
  }
  return {{"truncation", g.truncation()}, {"cells", cells}, {"src", src}, {"tgt", tgt}};
}

inline GlobularSet globset_from_json(const json& j) {
  const json& tr = detail::field(j, "truncation");
  if (!tr.is_number_integer() || tr.get<int>() < 0) throw ValidationError("json: truncation must be a natural number");
  const int n = tr.get<int>();
  const json& cells = detail::array_field(j, "cells");
  const json& src = detail::array_field(j, "src");
  const json& tgt = detail::array_field(j, "tgt");
  if (static_cast<int>(cells.size()) != n + 1) throw ValidationError("json: \"cells\" must list dimensions 0..truncation");
  if (static_cast<int>(src.size()) != n || static_cast<int>(tgt.size()) != n)
    throw ValidationError("json: \"src\" and \"tgt\" must list dimensions 1..truncation");
  GlobularSet g(n);
  for (int d = 0; d <= n; ++d) {
    if (!cells[d].is_array()) throw ValidationError("json: cells of dimension " + std::to_string(d) + " must be an array", d);
    if (d >= 1 && (!src[d - 1].is_array() || !tgt[d - 1].is_array() || src[d - 1].size() != cells[d].size() ||
                   tgt[d - 1].size() != cells[d].size()))
      throw ValidationError("json: src/tgt not total at dimension " + std::to_string(d), d);
    for (std::size_t i = 0; i < cells[d].size(); ++i) {
      const std::string name = detail::str(cells[d][i], "cell");
      if (d == 0) {
        g.add(0, name);
      } else {
        const std::string where = "boundary of '" + name + "'";
        g.add(d, name, detail::lookup_name(g, d - 1, src[d - 1][i], where), detail::lookup_name(g, d - 1, tgt[d - 1][i], where));
      }
    }
  }
  return g;
}

inline json to_json(const StrictCatTable& t) {
  json j = to_json(t.carrier());
  json ids = json::array(), comps = json::array();
  for (int d = 0; d < t.truncation(); ++d) {
    json row = json::array();
    for (CellRef x : t.cells(d)) {
      const int r = t.identity_entry(x);
      row.push_back(r < 0 ? json(nullptr) : json(t.name({d + 1, r})));
    }
    ids.push_back(row);
  }
  for (int d = 1; d <= t.truncation(); ++d)
    for (int k = 0; k < d; ++k) {
      json rows = json::array();
      for (CellRef u : t.cells(d))
        for (CellRef v : t.cells(d)) {
          const int r = t.composite_entry(k, u, v);
          if (r >= 0) rows.push_back({t.name(u), t.name(v), t.name({d, r})});
        }
      comps.push_back({{"k", k}, {"dim", d}, {"table", rows}});
    }
  j["id"] = ids;
  j["comp"] = comps;
  return j;
}

// Parses the tables without checking the strict laws; see load_table.
inline StrictCatTable table_from_json(const json& j) {
  StrictCatTable t(globset_from_json(j));
  const int n = t.truncation();
  const json& ids = detail::array_field(j, "id");
  if (static_cast<int>(ids.size()) != n) throw ValidationError("json: \"id\" must list dimensions 0..truncation-1");
  for (int d = 0; d < n; ++d) {
    if (!ids[d].is_array() || static_cast<int>(ids[d].size()) != t.count(d))
      throw ValidationError("json: identities not total at dimension " + std::to_string(d), d);
    for (int i = 0; i < t.count(d); ++i)
      t.set_identity({d, i}, detail::table_cell(t, d + 1, ids[d][i], "identity of '" + t.name({d, i}) + "'").index);
  }
  for (const json& block : detail::array_field(j, "comp")) {
    const json& kj = detail::field(block, "k");
    const json& dj = detail::field(block, "dim");
    if (!kj.is_number_integer() || !dj.is_number_integer()) throw ValidationError("json: comp block needs integer k and dim");
    const int k = kj.get<int>(), d = dj.get<int>();
    if (d < 1 || d > n || k < 0 || k >= d) throw ValidationError("json: comp block with k=" + std::to_string(k) + ", dim=" + std::to_string(d) + " out of range");
    for (const json& row : detail::array_field(block, "table")) {
      if (!row.is_array() || row.size() != 3) throw ValidationError("json: comp rows are [u, v, result]");
      const std::string where = "comp k=" + std::to_string(k) + " dim=" + std::to_string(d);
      const CellRef u = detail::table_cell(t, d, row[0], where), v = detail::table_cell(t, d, row[1], where);
      if (t.composite_entry(k, u, v) >= 0) throw ValidationError("json: duplicate " + where + " row for (" + t.name(u) + ", " + t.name(v) + ")");
      t.set_composite(k, u, v, detail::table_cell(t, d, row[2], where).index);
    }
  }
  return t;
}

inline StrictCatTable load_table(const json& j) {
  StrictCatTable t = table_from_json(j);
  const TableReport r = validate_strict_table(t);
  if (!r.ok()) throw ValidationError("table is not a strict ω-category: " + r.violations.front());
  return t;
}

inline json to_json(const CellMap& f) {
  json map = json::array();
  for (const auto& row : f.images()) {
    json names = json::array();
    for (CellRef c : row) names.push_back(f.target().name(c));
    map.push_back(names);
  }
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"map", map}};
}

inline CellMap map_from_json(const json& map, std::shared_ptr<const StrictCatTable> source,
                             std::shared_ptr<const StrictCatTable> target) {
  if (!map.is_array() || static_cast<int>(map.size()) != source->truncation() + 1)
    throw ValidationError("json: \"map\" must list dimensions 0..truncation of the source");
  std::vector<std::vector<CellRef>> images(map.size());
  for (int d = 0; d <= source->truncation(); ++d) {
    if (!map[d].is_array() || static_cast<int>(map[d].size()) != source->count(d))
      throw ValidationError("json: map not total at dimension " + std::to_string(d), d);
    for (int i = 0; i < source->count(d); ++i)
      images[d].push_back(detail::table_cell(*target, d, map[d][i], "image of '" + source->name({d, i}) + "'"));
  }
  return CellMap(std::move(source), std::move(target), std::move(images));
}

inline StrictFunctor functor_from_json(const json& j) {
  auto src = std::make_shared<const StrictCatTable>(load_table(detail::field(j, "source")));
  auto tgt = std::make_shared<const StrictCatTable>(load_table(detail::field(j, "target")));
  return StrictFunctor(map_from_json(detail::field(j, "map"), std::move(src), std::move(tgt)));
}

inline json to_json(const Verdict& v) {
  json j = {{"holds", v.holds}};
  if (!v.holds) {
    j["level"] = v.level;
    j["trace"] = v.trace;
  }
  return j;
}

inline json to_json(const EquivReport& r) {
  json per_n = json::array();
  for (int n = 0; n <= r.cap; ++n)
    per_n.push_back({{"n", n}, {"surjective", static_cast<bool>(r.surjective[n])}, {"injective", static_cast<bool>(r.injective[n])}});
  return {{"weak_equivalence", r.weak_equivalence},
          {"cap", r.cap},
          {"stable_beyond_cap", true},
          {"per_n", per_n},
          {"surjective", to_json(r.surj)},
          {"injective", to_json(r.inj)},
          {"reflects_invertibles", to_json(r.reflect)}};
}

inline json to_json(const HarnessReport& h) {
  json maps = json::object();
  for (const auto& [name, r] : h.maps) maps[name] = to_json(r);
  return {{"consistent", h.consistent()}, {"maps", maps}, {"violations", h.violations}};
}

// Members with their witnesses (inverse, u*u' ~> id, u'*u ~> id) per dimension.
inline json to_json(const InvertibleSet& X) {
  const StrictCatTable& t = X.host();
  json dims = json::array();
  for (int d = 1; d <= t.truncation(); ++d) {
    json rows = json::array();
    for (CellRef u : X.members(d)) {
      const auto w = X.witness(u);
      rows.push_back({{"cell", t.name(u)}, {"inverse", t.name(w->inverse)}, {"p", t.name(w->p)}, {"q", t.name(w->q)}});
    }
    dims.push_back({{"dim", d}, {"members", rows}});
  }
  return {{"truncation", t.truncation()}, {"iterations", X.iterations()}, {"invertible", dims}};
}

}  // namespace womega
