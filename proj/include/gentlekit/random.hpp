#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ribbon.hpp"
#include "walks.hpp"

namespace gentlekit {

struct RandomRibbonOptions {
  int min_vertices = 1;
  int max_vertices = 5;
  int max_extra_edges = 3;
};

// Random connected multigraph (loops allowed) with random per-vertex orders.
inline RibbonGraph random_ribbon(std::mt19937_64& rng, const RandomRibbonOptions& opt = {}) {
  for (;;) {
    int nv = std::uniform_int_distribution<int>(opt.min_vertices, opt.max_vertices)(rng);
    int extra = std::uniform_int_distribution<int>(0, opt.max_extra_edges)(rng);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < nv; ++v) edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
    std::uniform_int_distribution<int> pick(0, nv - 1);
    for (int k = 0; k < extra; ++k) edges.push_back({pick(rng), pick(rng)});
    if (edges.empty() || (nv == 2 && edges.size() == 1)) continue;
    std::shuffle(edges.begin(), edges.end(), rng);
    RibbonSpec spec;
    spec.half_edges.resize(nv);
    for (int v = 0; v < nv; ++v) spec.vertex_ids.push_back("v" + std::to_string(v + 1));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::string a = "h" + std::to_string(2 * e), b = "h" + std::to_string(2 * e + 1);
      spec.half_edges[edges[e].first].push_back(a);
      spec.half_edges[edges[e].second].push_back(b);
      spec.iota.push_back({a, b});
    }
    bool empty = false;
    for (auto& hs : spec.half_edges) {
      std::shuffle(hs.begin(), hs.end(), rng);
      empty = empty || hs.empty();
    }
    if (empty) continue;
    return make_ribbon(spec);
  }
}

// Random reduced walk with 1 <= length <= max_len.
inline Walk random_reduced_walk(std::mt19937_64& rng, const RibbonGraph& r, std::size_t max_len) {
  std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
  std::vector<int> hs{std::uniform_int_distribution<int>(0, static_cast<int>(r.num_half_edges()) - 1)(rng)};
  while (hs.size() < len) {
    int v = r.z[r.iota[hs.back()]];
    std::vector<int> options;
    for (int h : r.order[v])
      if (h != r.iota[hs.back()]) options.push_back(h);
    if (options.empty()) break;
    hs.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
  }
  return make_walk(r, hs);
}

}  // namespace gentlekit
