#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "quiver.hpp"

namespace gentlekit {

// Marked ribbon graph. Half-edges at a vertex are listed max first; position 0 is the marked half-edge.
// An ordered edge is identified with its target half-edge h, so its source half-edge is iota[h].
struct RibbonGraph {
  std::vector<std::string> vertex_ids;
  std::vector<std::vector<int>> order;
  std::vector<std::string> half_ids;
  std::vector<int> z, pos, iota;
  std::vector<std::string> edge_ids;
  std::vector<int> edge_of;
  std::vector<int> edge_target;  // reference orientation: target half-edge of the positive ordered edge
  std::vector<std::vector<std::string>> arrow_names;  // arrow_names[v][t-1] names the arrow between positions t-1 and t

  std::size_t num_vertices() const { return vertex_ids.size(); }
  std::size_t num_edges() const { return edge_ids.size(); }
  std::size_t num_half_edges() const { return z.size(); }
  int ell(int v) const { return static_cast<int>(order[v].size()) - 1; }
  bool is_min(int h) const { return pos[h] == ell(z[h]); }

  int edge_index(const std::string& label) const {
    auto it = std::find(edge_ids.begin(), edge_ids.end(), label);
    return it == edge_ids.end() ? -1 : static_cast<int>(it - edge_ids.begin());
  }
  int vertex_index(const std::string& id) const {
    auto it = std::find(vertex_ids.begin(), vertex_ids.end(), id);
    return it == vertex_ids.end() ? -1 : static_cast<int>(it - vertex_ids.begin());
  }

  // Ordered edge for a signed edge: positive is the reference orientation.
  int ordered(int edge, bool positive) const { return positive ? edge_target[edge] : iota[edge_target[edge]]; }
  bool is_positive(int h) const { return edge_target[edge_of[h]] == h; }
  std::string signed_label(int h) const { return (is_positive(h) ? "" : "-") + edge_ids[edge_of[h]]; }
  int target_vertex(int h) const { return z[h]; }
  int source_vertex(int h) const { return z[iota[h]]; }
};

using Bidirection = std::vector<int>;

struct RibbonSpec {
  std::vector<std::string> vertex_ids;
  std::vector<std::vector<std::string>> half_edges;  // per vertex, max to min
  std::vector<std::pair<std::string, std::string>> iota;  // edge k is iota[k]
  std::vector<std::string> edge_labels;                   // optional, defaults to 1..E
};

namespace detail {

// Fills z, pos, edge data; the reference target half-edge is the smaller (vertex index, position), unless flipped.
inline void finalize(RibbonGraph& r, const std::vector<std::pair<int, int>>& edges, const std::set<std::string>& flips) {
  const std::size_t nh = r.half_ids.size();
  r.z.assign(nh, -1);
  r.pos.assign(nh, -1);
  for (std::size_t v = 0; v < r.order.size(); ++v)
    for (std::size_t p = 0; p < r.order[v].size(); ++p) {
      r.z[r.order[v][p]] = static_cast<int>(v);
      r.pos[r.order[v][p]] = static_cast<int>(p);
    }
  r.iota.assign(nh, -1);
  r.edge_of.assign(nh, -1);
  r.edge_target.clear();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [a, b] = edges[e];
    r.iota[a] = b;
    r.iota[b] = a;
    r.edge_of[a] = r.edge_of[b] = static_cast<int>(e);
    bool a_first = std::make_pair(r.z[a], r.pos[a]) < std::make_pair(r.z[b], r.pos[b]);
    int tgt = a_first ? a : b;
    if (flips.count(r.edge_ids[e])) tgt = r.iota[tgt];
    r.edge_target.push_back(tgt);
  }
  for (const auto& f : flips)
    if (std::find(r.edge_ids.begin(), r.edge_ids.end(), f) == r.edge_ids.end())
      throw validation_error("UnknownEdge", "cannot flip unknown edge " + f);
  r.arrow_names.resize(r.order.size());
  for (std::size_t v = 0; v < r.order.size(); ++v)
    if (r.arrow_names[v].size() + 1 != r.order[v].size()) {
      r.arrow_names[v].clear();
      for (std::size_t t = 1; t < r.order[v].size(); ++t) r.arrow_names[v].push_back(r.vertex_ids[v] + "_" + std::to_string(t));
    }
}

inline bool ribbon_connected(const RibbonGraph& r) {
  if (r.num_vertices() == 0) return false;
  std::vector<char> seen(r.num_vertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int h : r.order[v]) {
      int u = r.z[r.iota[h]];
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

}  // namespace detail

// Builds and validates a marked ribbon graph from explicit data. Edge k is the k-th iota pair.
inline RibbonGraph make_ribbon(const RibbonSpec& spec, const std::set<std::string>& flips = {},
                               bool require_degree_two = true) {
  RibbonGraph r;
  r.vertex_ids = spec.vertex_ids;
  std::map<std::string, int> hidx;
  for (std::size_t v = 0; v < spec.half_edges.size(); ++v) {
    std::vector<int> ord;
    if (spec.half_edges[v].empty()) throw validation_error("EmptyVertex", "vertex " + spec.vertex_ids[v] + " has no half-edges");
    for (const auto& h : spec.half_edges[v]) {
      if (hidx.count(h)) throw validation_error("DuplicateHalfEdge", "half-edge " + h + " listed twice");
      hidx[h] = static_cast<int>(r.half_ids.size());
      ord.push_back(static_cast<int>(r.half_ids.size()));
      r.half_ids.push_back(h);
    }
    r.order.push_back(ord);
  }
  if (spec.vertex_ids.size() != spec.half_edges.size()) throw validation_error("BadRibbon", "vertex list mismatch");
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used(r.half_ids.size(), 0);
  for (const auto& [a, b] : spec.iota) {
    if (!hidx.count(a) || !hidx.count(b)) throw validation_error("UnknownHalfEdge", "iota pair (" + a + ", " + b + ") names an unknown half-edge");
    int x = hidx[a], y = hidx[b];
    if (x == y) throw validation_error("BadInvolution", "iota fixes half-edge " + a);
    if (used[x] || used[y]) throw validation_error("BadInvolution", "half-edge paired twice in (" + a + ", " + b + ")");
    used[x] = used[y] = 1;
    edges.push_back({x, y});
  }
  for (std::size_t h = 0; h < used.size(); ++h)
    if (!used[h]) throw validation_error("BadInvolution", "half-edge " + r.half_ids[h] + " is unpaired");
  if (!spec.edge_labels.empty()) {
    if (spec.edge_labels.size() != edges.size()) throw validation_error("BadRibbon", "edge label count mismatch");
    r.edge_ids = spec.edge_labels;
  } else {
    for (std::size_t e = 0; e < edges.size(); ++e) r.edge_ids.push_back(std::to_string(e + 1));
  }
  detail::finalize(r, edges, flips);
  if (!detail::ribbon_connected(r)) throw validation_error("Disconnected", "the ribbon graph is not connected");
  if (require_degree_two &&
      std::none_of(r.order.begin(), r.order.end(), [](const auto& o) { return o.size() >= 2; }))
    throw validation_error("DegenerateRibbon", "a marked ribbon graph needs a vertex of degree at least 2");
  return r;
}

inline RibbonGraph with_flips(const RibbonGraph& r, const std::set<std::string>& flips) {
  RibbonGraph out = r;
  std::vector<std::pair<int, int>> edges(r.num_edges());
  for (std::size_t e = 0; e < r.num_edges(); ++e) edges[e] = {r.edge_target[e], r.iota[r.edge_target[e]]};
  detail::finalize(out, edges, flips);
  return out;
}

// Builds a ribbon graph whose vertices are the given threads; edges are labelled by the centers.
inline RibbonGraph thread_ribbon(const GentleQuiver& g, const std::vector<Thread>& threads, const std::set<std::string>& flips) {
  RibbonGraph r;
  std::vector<std::vector<int>> at_center(g.n());
  for (const auto& th : threads) {
    r.vertex_ids.push_back(th.id);
    std::vector<int> ord;
    std::vector<std::string> names;
    for (std::size_t t = 0; t < th.centers.size(); ++t) {
      int h = static_cast<int>(r.half_ids.size());
      r.half_ids.push_back(th.id + "#" + std::to_string(t));
      ord.push_back(h);
      at_center[th.centers[t]].push_back(h);
    }
    for (int a : th.arrows) names.push_back(g.arrow_name(a));
    r.order.push_back(ord);
    r.arrow_names.push_back(names);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < g.n(); ++i) {
    if (at_center[i].size() != 2)
      throw internal_mismatch("vertex " + g.base.vertices[i] + " is the center of " + std::to_string(at_center[i].size()) +
                              " split threads");
    edges.push_back({at_center[i][0], at_center[i][1]});
    r.edge_ids.push_back(g.base.vertices[i]);
  }
  detail::finalize(r, edges, flips);
  return r;
}

// The marked ribbon graph of a gentle quiver: vertices are permitted threads, edges are quiver vertices.
inline RibbonGraph to_ribbon(const GentleQuiver& g, const std::set<std::string>& flips = {}) {
  return thread_ribbon(g, g.permitted, flips);
}

struct ForbiddenRibbon {
  RibbonGraph graph;
  Bidirection sigma_hat;
};

inline ForbiddenRibbon forbidden_ribbon(const GentleQuiver& g) {
  if (!g.finite_gl_dim) throw validation_error("InfiniteGlobalDimension", "the forbidden ribbon graph needs finite global dimension");
  ForbiddenRibbon f;
  f.graph = thread_ribbon(g, g.forbidden, {});
  f.sigma_hat.assign(f.graph.num_half_edges(), 1);
  for (std::size_t v = 0; v < f.graph.num_vertices(); ++v) {
    int l = f.graph.ell(static_cast<int>(v));
    for (int t = 0; t <= l; ++t) f.sigma_hat[f.graph.order[v][t]] = ((l - t) % 2 == 0) ? 1 : -1;
  }
  return f;
}

// The gentle quiver of a marked ribbon graph: arrows join direct predecessor/successor half-edges.
inline GentleQuiver from_ribbon(const RibbonGraph& r) {
  if (r.num_vertices() == 2 && r.num_edges() == 1)
    throw validation_error("DegenerateRibbon", "the graph with two vertices and one edge has no gentle quiver");
  BoundQuiver q;
  q.vertices = r.edge_ids;
  std::vector<std::vector<int>> arrow_at(r.num_vertices());
  for (std::size_t v = 0; v < r.num_vertices(); ++v) {
    arrow_at[v].push_back(-1);
    for (int t = 1; t <= r.ell(static_cast<int>(v)); ++t) {
      arrow_at[v].push_back(static_cast<int>(q.arrows.size()));
      q.arrows.push_back({r.arrow_names[v][t - 1], r.edge_of[r.order[v][t]], r.edge_of[r.order[v][t - 1]]});
    }
  }
  // beta joins h1' > h1; alpha joins h2' > h2 with h2 = iota(h1'); then alpha.beta lies in I.
  for (std::size_t v = 0; v < r.num_vertices(); ++v)
    for (int t = 1; t <= r.ell(static_cast<int>(v)); ++t) {
      int h2 = r.iota[r.order[v][t - 1]];
      if (r.pos[h2] == 0) continue;
      q.relations.insert({arrow_at[r.z[h2]][r.pos[h2]], arrow_at[v][t]});
    }
  return validate_gentle(q);
}

// Rows are edges, columns vertices; row {h, h'} is sigma(h) e_z(h) + sigma(h') e_z(h').
inline IntMatrix incidence_matrix(const RibbonGraph& r, const Bidirection& sigma = {}) {
  IntMatrix m(r.num_edges(), r.num_vertices());
  for (std::size_t h = 0; h < r.num_half_edges(); ++h)
    m(r.edge_of[h], r.z[h]) += sigma.empty() ? 1 : sigma[h];
  return m;
}

inline bool is_bipartite(const RibbonGraph& r) {
  std::vector<int> color(r.num_vertices(), -1);
  for (std::size_t s = 0; s < r.num_vertices(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int h : r.order[v]) {
        int u = r.z[r.iota[h]];
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Balanced: there is a potential p with p(z(h')) = -sigma(h) sigma(h') p(z(h)) on every edge {h, h'}.
inline bool is_balanced(const RibbonGraph& r, const Bidirection& sigma) {
  std::vector<int> p(r.num_vertices(), 0);
  for (std::size_t s = 0; s < r.num_vertices(); ++s) {
    if (p[s] != 0) continue;
    p[s] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int h : r.order[v]) {
        int h2 = r.iota[h];
        int u = r.z[h2];
        int want = -sigma[h] * sigma[h2] * p[v];
        if (p[u] == 0) {
          p[u] = want;
          q.push(u);
        } else if (p[u] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

// A direction from a bit mask over edges: sigma(reference target) = +1 when the bit is clear.
inline Bidirection direction_from_mask(const RibbonGraph& r, unsigned long long mask) {
  Bidirection s(r.num_half_edges(), 0);
  for (std::size_t e = 0; e < r.num_edges(); ++e) {
    int v = ((mask >> e) & 1ULL) ? -1 : 1;
    s[r.edge_target[e]] = v;
    s[r.iota[r.edge_target[e]]] = -v;
  }
  return s;
}

// S(alpha_t) = sigma(h_t), T(alpha_t) = -sigma(h_{t-1}) along the permitted thread of alpha.
inline StringFunctionPair string_functions(const GentleQuiver& g, const RibbonGraph& r, const Bidirection& sigma) {
  StringFunctionPair p;
  p.S.assign(g.base.num_arrows(), 0);
  p.T.assign(g.base.num_arrows(), 0);
  for (std::size_t k = 0; k < g.permitted.size(); ++k) {
    const auto& th = g.permitted[k];
    for (std::size_t t = 1; t <= th.arrows.size(); ++t) {
      p.S[th.arrows[t - 1]] = sigma[r.order[k][t]];
      p.T[th.arrows[t - 1]] = -sigma[r.order[k][t - 1]];
    }
  }
  return p;
}

inline std::set<StringFunctionPair> all_string_functions(const GentleQuiver& g, const RibbonGraph& r) {
  if (r.num_edges() > 20) throw Error(ErrorKind::Bound, "BoundTooLarge", "too many edges to enumerate directions");
  std::set<StringFunctionPair> out;
  for (unsigned long long mask = 0; mask < (1ULL << r.num_edges()); ++mask)
    out.insert(string_functions(g, r, direction_from_mask(r, mask)));
  return out;
}

struct OrientationRow {
  std::string edge;
  std::string target_half, source_half;
  std::string target_vertex, source_vertex;
};

inline std::vector<OrientationRow> orientation_table(const RibbonGraph& r) {
  std::vector<OrientationRow> rows;
  for (std::size_t e = 0; e < r.num_edges(); ++e) {
    int h = r.edge_target[e];
    rows.push_back({r.edge_ids[e], r.half_ids[h], r.half_ids[r.iota[h]], r.vertex_ids[r.z[h]], r.vertex_ids[r.source_vertex(h)]});
  }
  return rows;
}

inline std::string to_dot(const RibbonGraph& r) {
  std::ostringstream os;
  os << "graph ribbon {\n";
  for (const auto& v : r.vertex_ids) os << "  \"" << v << "\";\n";
  for (std::size_t e = 0; e < r.num_edges(); ++e) {
    int h = r.edge_target[e], h2 = r.iota[h];
    os << "  \"" << r.vertex_ids[r.z[h2]] << "\" -- \"" << r.vertex_ids[r.z[h]] << "\" [label=\"" << r.edge_ids[e]
       << "\", taillabel=\"" << r.pos[h2] << "\", headlabel=\"" << r.pos[h] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// Compares a against b under a vertex map b -> a: same orders, edge labels and involution.
inline bool same_marked_ribbon(const RibbonGraph& a, const RibbonGraph& b, const std::vector<int>& vmap) {
  if (a.num_vertices() != b.num_vertices() || a.num_half_edges() != b.num_half_edges() || vmap.size() != b.num_vertices())
    return false;
  std::set<int> img(vmap.begin(), vmap.end());
  if (img.size() != vmap.size() || img.count(-1)) return false;
  for (std::size_t v = 0; v < b.num_vertices(); ++v) {
    int av = vmap[v];
    if (a.order[av].size() != b.order[v].size()) return false;
    for (std::size_t t = 0; t < b.order[v].size(); ++t) {
      int hb = b.order[v][t], ha = a.order[av][t];
      if (a.edge_ids[a.edge_of[ha]] != b.edge_ids[b.edge_of[hb]]) return false;
      int pb = b.iota[hb], pa = a.iota[ha];
      if (a.z[pa] != vmap[b.z[pb]] || a.pos[pa] != b.pos[pb]) return false;
    }
  }
  return true;
}

// Vertex map from the rebuilt graph to the original, read off arrow names and trivial thread centers.
inline std::vector<int> roundtrip_vertex_map(const RibbonGraph& original, const RibbonGraph& rebuilt) {
  std::map<std::string, int> by_arrow;
  for (std::size_t v = 0; v < original.num_vertices(); ++v)
    for (const auto& n : original.arrow_names[v]) by_arrow[n] = static_cast<int>(v);
  std::vector<int> map(rebuilt.num_vertices(), -1);
  for (std::size_t v = 0; v < rebuilt.num_vertices(); ++v) {
    if (!rebuilt.arrow_names[v].empty()) {
      auto it = by_arrow.find(rebuilt.arrow_names[v][0]);
      if (it != by_arrow.end()) map[v] = it->second;
      continue;
    }
    const std::string& e = rebuilt.edge_ids[rebuilt.edge_of[rebuilt.order[v][0]]];
    for (std::size_t u = 0; u < original.num_vertices(); ++u)
      if (original.order[u].size() == 1 && original.edge_ids[original.edge_of[original.order[u][0]]] == e) map[v] = static_cast<int>(u);
  }
  return map;
}

// Structural equality of bound quivers up to arrow order.
inline bool same_bound_quiver(const BoundQuiver& a, const BoundQuiver& b) {
  if (a.vertices != b.vertices || a.arrows.size() != b.arrows.size()) return false;
  std::set<std::tuple<std::string, std::string, std::string>> aa, bb;
  for (const auto& x : a.arrows) aa.insert({x.name, a.vertices[x.source], a.vertices[x.target]});
  for (const auto& x : b.arrows) bb.insert({x.name, b.vertices[x.source], b.vertices[x.target]});
  if (aa != bb) return false;
  std::set<std::pair<std::string, std::string>> ra, rb;
  for (auto [x, y] : a.relations) ra.insert({a.arrows[x].name, a.arrows[y].name});
  for (auto [x, y] : b.relations) rb.insert({b.arrows[x].name, b.arrows[y].name});
  return ra == rb;
}

}  // namespace gentlekit
