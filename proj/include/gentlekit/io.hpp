#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauer.hpp"
#include "derived.hpp"
#include "invariants.hpp"
#include "ribbon.hpp"

namespace gentlekit {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "FileNotFound", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string big_str(const BigInt& x) { return x.str(); }

inline json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(big_str(x));
  return a;
}

inline json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline json to_json(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(big_str(c));
  return a;
}

inline json to_json(const AAG& a) {
  json out = json::array();
  for (const auto& [nm, c] : a) out.push_back({{"n", nm.first}, {"m", nm.second}, {"count", c}});
  return out;
}

// Ribbon graph JSON: {vertices:[{id, halfEdges:[max..min], multiplicity?}], iota:[[h,h'],...], multiplicity?:{id:k}}.
struct ParsedRibbon {
  RibbonGraph graph;
  std::vector<long> multiplicity;
};

inline ParsedRibbon parse_ribbon_json(const std::string& text, const std::set<std::string>& flips = {},
                                      bool require_degree_two = true) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    RibbonSpec spec;
    std::vector<long> mult;
    for (const auto& v : j.at("vertices")) {
      spec.vertex_ids.push_back(v.at("id").is_string() ? v.at("id").get<std::string>() : v.at("id").dump());
      std::vector<std::string> hs;
      for (const auto& h : v.at("halfEdges")) hs.push_back(h.is_string() ? h.get<std::string>() : h.dump());
      spec.half_edges.push_back(hs);
      mult.push_back(v.contains("multiplicity") ? v.at("multiplicity").get<long>() : 1);
    }
    for (const auto& p : j.at("iota")) {
      if (!p.is_array() || p.size() != 2) throw parse_error("iota entries must be pairs");
      auto s = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
      spec.iota.push_back({s(p[0]), s(p[1])});
    }
    if (j.contains("multiplicity"))
      for (const auto& [k, val] : j.at("multiplicity").items()) {
        auto it = std::find(spec.vertex_ids.begin(), spec.vertex_ids.end(), k);
        if (it == spec.vertex_ids.end()) throw validation_error("UnknownVertex", "multiplicity for unknown vertex " + k);
        mult[it - spec.vertex_ids.begin()] = val.get<long>();
      }
    return {make_ribbon(spec, flips, require_degree_two), mult};
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed ribbon graph JSON: ") + e.what());
  }
}

inline json ribbon_to_json(const RibbonGraph& r) {
  json vs = json::array();
  for (std::size_t v = 0; v < r.num_vertices(); ++v) {
    json hs = json::array();
    for (int h : r.order[v]) hs.push_back(r.half_ids[h]);
    vs.push_back({{"id", r.vertex_ids[v]}, {"halfEdges", hs}});
  }
  json io = json::array();
  for (std::size_t e = 0; e < r.num_edges(); ++e) {
    int h = r.edge_target[e];
    io.push_back({r.half_ids[h], r.half_ids[r.iota[h]]});
  }
  return {{"vertices", vs}, {"iota", io}};
}

inline json orientation_json(const RibbonGraph& r) {
  json a = json::array();
  for (const auto& row : orientation_table(r))
    a.push_back({{"edge", row.edge},
                 {"target", row.target_vertex},
                 {"targetHalfEdge", row.target_half},
                 {"source", row.source_vertex},
                 {"sourceHalfEdge", row.source_half}});
  return a;
}

inline json walk_json(const RibbonGraph& r, const Walk& w) { return format_walk(r, w); }

inline json complex_json(const RibbonGraph& r, const StringComplex& x) {
  json terms = json::array(), maps = json::array();
  for (const auto& t : x.terms) terms.push_back({{"degree", t.degree}, {"projective", r.edge_ids[t.projective]}});
  for (const auto& m : x.maps) maps.push_back({{"from", m.from}, {"to", m.to}, {"path", m.path}, {"reversed", m.reversed}});
  return {{"shift", x.shift}, {"walk", walk_json(r, x.walk)}, {"terms", terms}, {"maps", maps}};
}

inline json faces_json(const RibbonGraph& r, const std::vector<Face>& fs) {
  json a = json::array();
  for (const auto& f : fs) {
    json factors = json::array();
    for (int v : f.factors) factors.push_back(r.vertex_ids[v]);
    a.push_back({{"walk", walk_json(r, f.walk)},
                 {"full", f.full},
                 {"length", f.length},
                 {"closedDegree", f.closed_degree},
                 {"antiWalkFactors", factors}});
  }
  return a;
}

inline json fingerprint_json(const Fingerprint& f) {
  json fp = json::array();
  for (const auto& [ld, c] : f.face_profile) fp.push_back({{"length", ld.first}, {"closedDegree", ld.second}, {"count", c}});
  return {{"numQVertices", f.num_q_vertices},
          {"numQArrows", f.num_q_arrows},
          {"numGVertices", f.num_g_vertices},
          {"numGEdges", f.num_g_edges},
          {"numFaces", f.num_faces},
          {"bipartite", f.bipartite},
          {"nabla", f.nabla},
          {"corank", f.corank},
          {"detCartan", big_str(f.det_cartan)},
          {"aag", to_json(f.aag)},
          {"coxeterPoly", to_json(f.coxeter_poly)},
          {"faceProfile", fp}};
}

inline json analysis_json(const Instance& in) {
  const auto& g = in.g;
  auto e = euler_analysis(in);
  auto aag = aag_invariant(in);
  auto cox = coxeter(in, aag);
  auto fp = fingerprint(in);
  json threads = json::array();
  for (const auto& t : g.permitted) threads.push_back({{"id", t.id}, {"path", g.thread_str(t)}});
  json fthreads = json::array();
  for (const auto& t : g.forbidden) fthreads.push_back({{"id", t.id}, {"path", g.thread_str(t)}});
  json cycles = json::array();
  for (const auto& c : g.full_cycles) {
    json cc = json::array();
    for (int a : c) cc.push_back(g.arrow_name(a));
    cycles.push_back(cc);
  }
  json anti = json::array();
  for (std::size_t v = 0; v < in.rib.num_vertices(); ++v)
    anti.push_back({{"vertex", in.rib.vertex_ids[v]}, {"walk", walk_json(in.rib, in.aw.ot[v])}, {"xi", in.rib.vertex_ids[in.aw.xi[v]]}});
  json euler = {{"gramProjectives", to_json(e.gram_projectives)},
                {"gramSimples", e.gram_simples ? to_json(*e.gram_simples) : json(nullptr)},
                {"nabla", e.nabla},
                {"rank", e.rank},
                {"corank", e.corank},
                {"unitInProjectives", e.unit_projectives},
                {"unitInSimples", e.unit_simples ? json(*e.unit_simples) : json(nullptr)},
                {"connectedInSimples", e.connected_simples ? json(*e.connected_simples) : json(nullptr)},
                {"dynkinProjectives", e.dynkin_projectives},
                {"dynkinSimples", e.dynkin_simples ? json(*e.dynkin_simples) : json(nullptr)}};
  return {{"quiver", {{"vertices", g.base.num_vertices()}, {"arrows", g.base.num_arrows()}}},
          {"globalDimensionFinite", g.finite_gl_dim},
          {"permittedThreads", threads},
          {"forbiddenThreads", fthreads},
          {"fullCycles", cycles},
          {"cartan", to_json(in.cartan)},
          {"ribbon", ribbon_to_json(in.rib)},
          {"orientation", orientation_json(in.rib)},
          {"antiWalks", anti},
          {"faces", faces_json(in.rib, faces(in.rib))},
          {"euler", euler},
          {"aag", to_json(aag)},
          {"aagText", aag_str(aag)},
          {"coxeter", {{"matrix", to_json(cox.matrix)}, {"poly", to_json(cox.poly)}, {"polyText", cox.poly.str()}}},
          {"fingerprint", fingerprint_json(fp)}};
}

}  // namespace gentlekit
