#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "ribbon.hpp"

namespace gentlekit {

// A walk i_1 ... i_L of ordered edges (each given by its target half-edge); i_L is traversed first.
// Trivial walks carry only their vertex.
struct Walk {
  std::vector<int> hs;
  int vertex = -1;

  bool trivial() const { return hs.empty(); }
  std::size_t length() const { return hs.size(); }
  friend bool operator==(const Walk&, const Walk&) = default;
};

inline Walk trivial_walk(int v) { return Walk{{}, v}; }

inline int walk_target(const RibbonGraph& r, const Walk& w) { return w.trivial() ? w.vertex : r.z[w.hs.front()]; }
inline int walk_source(const RibbonGraph& r, const Walk& w) { return w.trivial() ? w.vertex : r.z[r.iota[w.hs.back()]]; }

inline bool concatenable(const RibbonGraph& r, int i, int j) { return r.z[r.iota[i]] == r.z[j]; }

inline Walk make_walk(const RibbonGraph& r, std::vector<int> hs) {
  if (hs.empty()) throw walk_error("EmptyWalk", "use trivial_walk for walks of length 0");
  for (std::size_t t = 0; t + 1 < hs.size(); ++t)
    if (!concatenable(r, hs[t], hs[t + 1]))
      throw walk_error("NotConcatenable", "edges " + r.signed_label(hs[t]) + " and " + r.signed_label(hs[t + 1]) +
                                              " at position " + std::to_string(t + 1) + " do not meet");
  Walk w;
  w.hs = std::move(hs);
  w.vertex = r.z[w.hs.front()];
  return w;
}

inline Walk parse_walk(const std::string& text, const RibbonGraph& r) {
  std::istringstream is(text);
  std::string tok;
  std::vector<int> hs;
  while (is >> tok) {
    bool neg = tok[0] == '-';
    std::string label = neg ? tok.substr(1) : tok;
    int e = r.edge_index(label);
    if (e < 0) throw walk_error("UnknownEdge", "no edge labelled '" + label + "'");
    hs.push_back(r.ordered(e, !neg));
  }
  if (hs.empty()) throw walk_error("EmptyWalk", "a walk needs at least one edge");
  return make_walk(r, hs);
}

inline std::string format_walk(const RibbonGraph& r, const Walk& w) {
  if (w.trivial()) return "e(" + r.vertex_ids[w.vertex] + ")";
  std::string s;
  for (int h : w.hs) s += (s.empty() ? "" : " ") + r.signed_label(h);
  return s;
}

inline Walk inverse(const RibbonGraph& r, const Walk& w) {
  if (w.trivial()) return w;
  Walk v;
  for (auto it = w.hs.rbegin(); it != w.hs.rend(); ++it) v.hs.push_back(r.iota[*it]);
  v.vertex = r.z[v.hs.front()];
  return v;
}

inline bool is_reduced(const RibbonGraph& r, const Walk& w) {
  for (std::size_t t = 0; t + 1 < w.hs.size(); ++t)
    if (w.hs[t + 1] == r.iota[w.hs[t]]) return false;
  return true;
}

inline bool is_closed(const RibbonGraph& r, const Walk& w) { return walk_source(r, w) == walk_target(r, w); }

// +1 when s^h(i) is above t^h(j) at their common vertex, -1 when below; -1 for j the inverse of i.
inline int pair_degree(const RibbonGraph& r, int i, int j) {
  int s = r.iota[i];
  if (s == j) return -1;
  return r.pos[s] < r.pos[j] ? 1 : -1;
}

inline int degree(const RibbonGraph& r, const Walk& w) {
  if (!is_reduced(r, w)) throw walk_error("NotReduced", "walk " + format_walk(r, w) + " is not reduced");
  int d = 0;
  for (std::size_t t = 0; t + 1 < w.hs.size(); ++t) d += pair_degree(r, w.hs[t], w.hs[t + 1]);
  return d;
}

inline IntVector incidence_vector(const RibbonGraph& r, const Walk& w) {
  IntVector v(r.num_edges());
  for (std::size_t t = 0; t < w.hs.size(); ++t) v[r.edge_of[w.hs[t]]] += (t % 2 == 0) ? 1 : -1;
  return v;
}

inline Walk subwalk(const Walk& w, std::size_t from, std::size_t to, const RibbonGraph& r) {
  if (from >= to) return trivial_walk(from < w.hs.size() ? r.z[w.hs[from]] : walk_source(r, w));
  return make_walk(r, std::vector<int>(w.hs.begin() + static_cast<long>(from), w.hs.begin() + static_cast<long>(to)));
}

// Plain concatenation; requires s(w1) = t(w2).
inline Walk concat(const RibbonGraph& r, const Walk& w1, const Walk& w2) {
  if (walk_source(r, w1) != walk_target(r, w2))
    throw walk_error("NotConcatenable", "source of the left walk differs from target of the right walk");
  if (w1.trivial()) return w2;
  if (w2.trivial()) return w1;
  std::vector<int> hs = w1.hs;
  hs.insert(hs.end(), w2.hs.begin(), w2.hs.end());
  return make_walk(r, hs);
}

inline Walk power(const RibbonGraph& r, const Walk& w, std::size_t k) {
  if (k == 0) return trivial_walk(walk_target(r, w));
  Walk out = w;
  for (std::size_t i = 1; i < k; ++i) out = concat(r, out, w);
  return out;
}

// Smallest p dividing the length such that the sequence is p-periodic.
inline std::size_t period(const std::vector<int>& s) {
  for (std::size_t p = 1; p <= s.size(); ++p) {
    if (s.size() % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < s.size() && ok; ++i) ok = s[i] == s[i - p];
    if (ok) return p;
  }
  return s.size();
}

inline bool is_primitive(const Walk& w) { return !w.trivial() && period(w.hs) == w.hs.size(); }

enum class WalkClass { Open, ClosedEven, ClosedOdd, Belt, NotReduced };

inline std::string to_string(WalkClass c) {
  switch (c) {
    case WalkClass::Open: return "open";
    case WalkClass::ClosedEven: return "closed-even";
    case WalkClass::ClosedOdd: return "closed-odd";
    case WalkClass::Belt: return "belt";
    case WalkClass::NotReduced: return "not-reduced";
  }
  return "?";
}

// i_1 = i_{L+1}, w_[L] nontrivial primitive, deg(w) = 0 and deg(i_L i_1) + deg(i_1 i_2) = 0.
inline bool is_belt(const RibbonGraph& r, const Walk& w) {
  if (w.length() < 2 || !is_reduced(r, w) || w.hs.front() != w.hs.back()) return false;
  const std::size_t L = w.length() - 1;
  std::vector<int> core(w.hs.begin(), w.hs.begin() + static_cast<long>(L));
  if (period(core) != core.size()) return false;
  if (degree(r, w) != 0) return false;
  int i1 = w.hs[0], iL = w.hs[L - 1], i2 = w.hs[1];
  return pair_degree(r, iL, i1) + pair_degree(r, i1, i2) == 0;
}

inline WalkClass classify_walk(const RibbonGraph& r, const Walk& w) {
  if (!is_reduced(r, w)) return WalkClass::NotReduced;
  if (is_belt(r, w)) return WalkClass::Belt;
  if (!is_closed(r, w)) return WalkClass::Open;
  return w.length() % 2 == 0 ? WalkClass::ClosedEven : WalkClass::ClosedOdd;
}

// Ordered edge following i along a face: the next lower half-edge, wrapping to the marked one from the minimum.
inline int face_step(const RibbonGraph& r, int i, bool& wrapped) {
  int s = r.iota[i];
  int v = r.z[s];
  wrapped = r.is_min(s);
  return wrapped ? r.order[v][0] : r.order[v][r.pos[s] + 1];
}

struct AntiWalks {
  std::vector<Walk> ot;  // OT(alpha), indexed by vertex
  std::vector<int> xi;   // xi(alpha) = s(OT(alpha))
};

inline AntiWalks anti_walks(const RibbonGraph& r) {
  AntiWalks a;
  for (std::size_t v = 0; v < r.num_vertices(); ++v) {
    std::vector<int> hs{r.order[v][0]};
    while (!r.is_min(r.iota[hs.back()])) {
      bool wrapped = false;
      hs.push_back(face_step(r, hs.back(), wrapped));
      if (hs.size() > 2 * r.num_edges() + 1) throw internal_mismatch("anti-walk does not terminate");
    }
    a.ot.push_back(make_walk(r, hs));
    a.xi.push_back(walk_source(r, a.ot.back()));
  }
  return a;
}

inline bool signed_less(const RibbonGraph& r, int a, int b) {
  auto key = [&](int h) { return std::make_pair(r.edge_of[h], r.is_positive(h) ? 0 : 1); };
  return key(a) < key(b);
}

inline bool walk_less(const RibbonGraph& r, const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](int x, int y) { return signed_less(r, x, y); });
}

inline std::vector<int> canonical_rotation(const RibbonGraph& r, const std::vector<int>& cyc) {
  std::vector<int> best = cyc;
  for (std::size_t k = 1; k < cyc.size(); ++k) {
    std::vector<int> rot(cyc.begin() + static_cast<long>(k), cyc.end());
    rot.insert(rot.end(), cyc.begin(), cyc.begin() + static_cast<long>(k));
    if (walk_less(r, rot, best)) best = rot;
  }
  return best;
}

struct Face {
  Walk walk;
  bool full = false;
  int length = 0;
  int closed_degree = 0;
  std::vector<int> factors;  // vertices alpha whose anti-walks OT(alpha) make up the face, in order
  int n() const { return (length - closed_degree) / 2; }
  int m() const { return (length + closed_degree) / 2; }
};

inline int closed_degree(const RibbonGraph& r, const std::vector<int>& cyc) {
  int d = 0;
  for (std::size_t t = 0; t < cyc.size(); ++t) d += pair_degree(r, cyc[t], cyc[(t + 1) % cyc.size()]);
  return d;
}

inline std::vector<Face> faces(const RibbonGraph& r) {
  const std::size_t nh = r.num_half_edges();
  std::vector<char> seen(nh, 0);
  std::vector<Face> out;
  for (std::size_t start = 0; start < nh; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    std::vector<char> wraps;
    int i = static_cast<int>(start);
    while (!seen[i]) {
      seen[i] = 1;
      cyc.push_back(i);
      bool wrapped = false;
      i = face_step(r, i, wrapped);
      wraps.push_back(wrapped);
    }
    if (i != static_cast<int>(start)) throw internal_mismatch("face step is not a permutation");
    Face f;
    f.full = std::none_of(wraps.begin(), wraps.end(), [](char c) { return c; });
    f.length = static_cast<int>(cyc.size());
    f.closed_degree = closed_degree(r, cyc);
    if (!f.full) {
      // Start right after a wrap, at a marked half-edge; each wrap closes one anti-walk factor.
      std::size_t k = 0;
      while (!wraps[(k + cyc.size() - 1) % cyc.size()]) ++k;
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        std::size_t idx = (k + t) % cyc.size();
        if (t == 0 || wraps[(idx + cyc.size() - 1) % cyc.size()]) f.factors.push_back(r.z[cyc[idx]]);
      }
    }
    f.walk.hs = canonical_rotation(r, cyc);
    f.walk.vertex = r.z[f.walk.hs.front()];
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [&](const Face& a, const Face& b) { return walk_less(r, a.walk.hs, b.walk.hs); });
  return out;
}

// Cancels the maximal middle part i ... i^{-1} of w1 w2.
inline Walk reduced_concat(const RibbonGraph& r, const Walk& w1, const Walk& w2) {
  if (walk_source(r, w1) != walk_target(r, w2))
    throw walk_error("NotConcatenable", "s(" + format_walk(r, w1) + ") differs from t(" + format_walk(r, w2) + ")");
  std::vector<int> a = w1.hs;
  std::size_t b = 0;
  while (!a.empty() && b < w2.hs.size() && w2.hs[b] == r.iota[a.back()]) {
    a.pop_back();
    ++b;
  }
  a.insert(a.end(), w2.hs.begin() + static_cast<long>(b), w2.hs.end());
  if (a.empty()) return trivial_walk(walk_target(r, w1));
  return make_walk(r, a);
}

struct PlusOps {
  Walk left;   // TO(t(w)) . w
  Walk right;  // w . OT(s(w))
  Walk both;
  int m_shift = 0;
};

inline PlusOps plus_ops(const RibbonGraph& r, const AntiWalks& aw, const Walk& w) {
  if (w.trivial()) throw walk_error("TrivialInput", "plus operations need a nontrivial walk");
  if (!is_reduced(r, w)) throw walk_error("NotReduced", "walk " + format_walk(r, w) + " is not reduced");
  Walk to = inverse(r, aw.ot[walk_target(r, w)]);
  const Walk& ot = aw.ot[walk_source(r, w)];
  PlusOps p;
  p.left = reduced_concat(r, to, w);
  p.right = reduced_concat(r, w, ot);
  p.both = reduced_concat(r, p.left, ot);
  p.m_shift = static_cast<int>(to.length()) - 2;
  return p;
}

// The (m, w) ~ (m + deg w, w^{-1}) representative with the smaller signed-edge sequence.
inline std::pair<int, Walk> canonical_rep(const RibbonGraph& r, int m, const Walk& w) {
  if (w.trivial()) return {m, w};
  Walk inv = inverse(r, w);
  if (walk_less(r, inv.hs, w.hs)) return {m + degree(r, w), inv};
  return {m, w};
}

enum class Resolvable { None, Left, Right, TwoSided };

inline std::string to_string(Resolvable c) {
  switch (c) {
    case Resolvable::None: return "none";
    case Resolvable::Left: return "left";
    case Resolvable::Right: return "right";
    case Resolvable::TwoSided: return "two-sided";
  }
  return "?";
}

struct ResolvableReport {
  Resolvable kind = Resolvable::None;
  bool primitive = false;
};

namespace detail {

// Full face containing ordered edge i, as the cyclic sequence starting at i; empty if i lies on no full face.
inline std::vector<int> full_face_through(const RibbonGraph& r, int i) {
  std::vector<int> cyc{i};
  bool wrapped = false;
  int j = face_step(r, i, wrapped);
  if (wrapped) return {};
  while (j != i) {
    cyc.push_back(j);
    j = face_step(r, j, wrapped);
    if (wrapped) return {};
  }
  return cyc;
}

inline bool left_resolvable(const RibbonGraph& r, const std::vector<int>& hs) {
  if (hs.size() < 2 || full_face_through(r, hs[0]).empty()) return false;
  for (std::size_t t = 0; t + 1 < hs.size(); ++t)
    if (hs[t + 1] == r.iota[hs[t]]) return false;
  int d = 0;
  for (std::size_t t = 0; t + 1 < hs.size(); ++t) {
    d += pair_degree(r, hs[t], hs[t + 1]);
    if (d < 0) return false;
  }
  return true;
}

inline bool primitive_left(const RibbonGraph& r, const std::vector<int>& hs) {
  auto face = full_face_through(r, hs[0]);
  const std::size_t L = hs.size() - 1;
  for (std::size_t s = 2; s <= L; ++s) {
    bool on_face = true;
    for (std::size_t t = 0; t < s && on_face; ++t) on_face = hs[t] == face[t % face.size()];
    if (on_face && left_resolvable(r, std::vector<int>(hs.begin() + static_cast<long>(s - 1), hs.end()))) return false;
  }
  return true;
}

}  // namespace detail

inline ResolvableReport resolvable_classify(const RibbonGraph& r, const Walk& w) {
  ResolvableReport rep;
  if (w.trivial() || !is_reduced(r, w)) return rep;
  Walk inv = inverse(r, w);
  bool left = detail::left_resolvable(r, w.hs), right = detail::left_resolvable(r, inv.hs);
  if (left && right) {
    rep.kind = Resolvable::TwoSided;
    rep.primitive = detail::primitive_left(r, w.hs) && detail::primitive_left(r, inv.hs);
  } else if (left) {
    rep.kind = Resolvable::Left;
    rep.primitive = detail::primitive_left(r, w.hs);
  } else if (right) {
    rep.kind = Resolvable::Right;
    rep.primitive = detail::primitive_left(r, inv.hs);
  }
  return rep;
}

// All reduced walks with 1 <= length <= max_len, in a deterministic order.
inline std::vector<Walk> reduced_walks(const RibbonGraph& r, std::size_t max_len) {
  std::vector<Walk> out;
  std::vector<std::vector<int>> layer;
  for (std::size_t e = 0; e < r.num_edges(); ++e) {
    layer.push_back({r.ordered(static_cast<int>(e), true)});
    layer.push_back({r.ordered(static_cast<int>(e), false)});
  }
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& hs : layer) {
      out.push_back(Walk{hs, r.z[hs.front()]});
      if (len == max_len) continue;
      int v = r.z[r.iota[hs.back()]];
      for (int h : r.order[v]) {
        if (h == r.iota[hs.back()]) continue;
        auto ext = hs;
        ext.push_back(h);
        next.push_back(std::move(ext));
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace gentlekit
