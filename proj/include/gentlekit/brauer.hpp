#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "ribbon.hpp"

namespace gentlekit {

struct BrauerGraph {
  RibbonGraph graph;
  std::vector<long> multiplicity;  // per vertex, positive

  bool trivial_multiplicity() const {
    return std::all_of(multiplicity.begin(), multiplicity.end(), [](long m) { return m == 1; });
  }
};

inline BrauerGraph make_brauer(RibbonGraph g, std::vector<long> mult = {}) {
  if (mult.empty()) mult.assign(g.num_vertices(), 1);
  if (mult.size() != g.num_vertices()) throw validation_error("BadMultiplicity", "one multiplicity per vertex expected");
  for (long m : mult)
    if (m < 1) throw validation_error("BadMultiplicity", "multiplicities must be positive");
  if (g.num_edges() == 0) throw validation_error("NoEdges", "a Brauer graph needs at least one edge");
  return {std::move(g), std::move(mult)};
}

// C_B = sum over vertices of mult(v) c_v c_v^tr, with c_v the v-th column of Inc(G).
inline IntMatrix brauer_cartan(const BrauerGraph& b) {
  IntMatrix inc = incidence_matrix(b.graph);
  const std::size_t e = inc.rows();
  IntMatrix c(e, e);
  for (std::size_t v = 0; v < inc.cols(); ++v) {
    IntVector col = inc.column(v);
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < e; ++j) c(i, j) += b.multiplicity[v] * col[i] * col[j];
  }
  return c;
}

enum class BrauerShape { Tree, OddOneCycle, Other };

inline std::string to_string(BrauerShape s) {
  switch (s) {
    case BrauerShape::Tree: return "tree";
    case BrauerShape::OddOneCycle: return "odd-1-cycle";
    case BrauerShape::Other: return "other";
  }
  return "?";
}

// Prunes leaves; what remains is empty for trees and a single cycle for 1-cycle graphs.
inline BrauerShape brauer_shape(const RibbonGraph& g) {
  const std::size_t nv = g.num_vertices(), ne = g.num_edges();
  std::vector<int> deg(nv, 0);
  for (std::size_t h = 0; h < g.num_half_edges(); ++h) deg[g.z[h]] += 1;
  std::vector<char> alive_e(ne, 1), alive_v(nv, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < nv; ++v) {
      if (!alive_v[v] || deg[v] != 1) continue;
      for (int h : g.order[v]) {
        int e = g.edge_of[h];
        if (!alive_e[e]) continue;
        alive_e[e] = 0;
        deg[v] -= 1;
        deg[g.z[g.iota[h]]] -= 1;
      }
      alive_v[v] = 0;
      changed = true;
    }
  }
  std::size_t rem_e = 0, rem_v = 0;
  for (std::size_t e = 0; e < ne; ++e) rem_e += alive_e[e];
  for (std::size_t v = 0; v < nv; ++v)
    if (alive_v[v] && deg[v] > 0) ++rem_v;
  if (rem_e == 0) return BrauerShape::Tree;
  for (std::size_t v = 0; v < nv; ++v)
    if (alive_v[v] && deg[v] > 0 && deg[v] != 2) return BrauerShape::Other;
  if (rem_e != rem_v) return BrauerShape::Other;
  return rem_e % 2 == 1 ? BrauerShape::OddOneCycle : BrauerShape::Other;
}

struct BrauerReport {
  IntMatrix cartan;
  bool positive_definite = false;
  BrauerShape shape = BrauerShape::Other;
  std::string rep_type;  // empty unless multiplicities are trivial
};

inline BrauerReport brauer_classify(const BrauerGraph& b) {
  BrauerReport r;
  r.cartan = brauer_cartan(b);
  r.positive_definite = rank_corank(r.cartan).corank == 0;
  r.shape = brauer_shape(b.graph);
  if (r.positive_definite != (r.shape != BrauerShape::Other))
    throw internal_mismatch("definiteness of C_B disagrees with the graph shape");
  if (b.trivial_multiplicity()) {
    switch (r.shape) {
      case BrauerShape::Tree: r.rep_type = "finite"; break;
      case BrauerShape::OddOneCycle: r.rep_type = "1-domestic"; break;
      case BrauerShape::Other: r.rep_type = "other"; break;
    }
  }
  return r;
}

}  // namespace gentlekit
