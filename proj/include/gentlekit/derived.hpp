#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "walks.hpp"

namespace gentlekit {

struct ComplexTerm {
  int degree = 0;
  int projective = 0;  // edge index
};

struct ComplexMap {
  int from = 0;  // term indices
  int to = 0;
  std::vector<std::string> path;
  bool reversed = false;
};

struct StringComplex {
  int shift = 0;
  Walk walk;
  std::vector<ComplexTerm> terms;
  std::vector<ComplexMap> maps;
};

struct BandComplex {
  int shift = 0;
  Walk belt;
  int fiber_dim = 1;
};

// Arrows alpha_{s+1} ... alpha_t for a pair i j of degree +1 at vertex v, where s = pos(s^h(i)), t = pos(t^h(j)).
inline std::vector<std::string> homotopy_letter(const RibbonGraph& r, int i, int j) {
  int s = r.iota[i];
  int v = r.z[s];
  std::vector<std::string> p;
  for (int t = r.pos[s] + 1; t <= r.pos[j]; ++t) p.push_back(r.arrow_names[v][t - 1]);
  return p;
}

inline StringComplex build_string_complex(const RibbonGraph& r, int m, const Walk& w) {
  StringComplex x;
  x.shift = m;
  x.walk = w;
  if (w.trivial()) return x;
  if (!is_reduced(r, w)) throw walk_error("NotReduced", "walk " + format_walk(r, w) + " is not reduced");
  int d = m;
  for (std::size_t t = 0; t < w.length(); ++t) {
    x.terms.push_back({d, r.edge_of[w.hs[t]]});
    if (t + 1 == w.length()) break;
    int i = w.hs[t], j = w.hs[t + 1];
    int dg = pair_degree(r, i, j);
    ComplexMap mp;
    if (dg > 0) {
      mp.from = static_cast<int>(t);
      mp.to = static_cast<int>(t + 1);
      mp.path = homotopy_letter(r, i, j);
    } else {
      mp.from = static_cast<int>(t + 1);
      mp.to = static_cast<int>(t);
      mp.path = homotopy_letter(r, r.iota[j], r.iota[i]);
      mp.reversed = true;
    }
    x.maps.push_back(mp);
    d += dg;
  }
  return x;
}

inline IntVector k0_class(const RibbonGraph& r, int m, const Walk& w) {
  IntVector v = incidence_vector(r, w);
  return (m % 2 == 0) ? v : scaled(v, -1);
}

inline IntVector k0_class(const RibbonGraph& r, const StringComplex& x) { return k0_class(r, x.shift, x.walk); }

// Alternating sum of the terms; agrees with k0_class.
inline IntVector k0_from_terms(const RibbonGraph& r, const StringComplex& x) {
  IntVector v(r.num_edges());
  for (const auto& t : x.terms) v[t.projective] += (t.degree % 2 == 0) ? 1 : -1;
  return v;
}

inline IntVector k0_class(const RibbonGraph& r, const BandComplex& b) {
  if (!is_belt(r, b.belt)) throw walk_error("NotABelt", "walk " + format_walk(r, b.belt) + " is not a belt");
  Walk core = subwalk(b.belt, 0, b.belt.length() - 1, r);
  return scaled(k0_class(r, b.shift, core), b.fiber_dim);
}

enum class RootClass { Zero, One, Two, Other };

inline std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::Zero: return "0-root";
    case RootClass::One: return "1-root";
    case RootClass::Two: return "2-root";
    case RootClass::Other: return "other";
  }
  return "?";
}

inline BigInt euler_value(const IntMatrix& cartan, const IntVector& x) { return qform_eval(cartan + cartan.transpose(), x); }

inline RootClass root_classify(const IntMatrix& cartan, const IntVector& x) {
  BigInt q = euler_value(cartan, x);
  if (q == 0) return RootClass::Zero;
  if (q == 1) return RootClass::One;
  if (q == 2) return RootClass::Two;
  return RootClass::Other;
}

struct ClassWitness {
  IntVector cls;
  int shift = 0;
  Walk walk;
};

struct PerfectClasses {
  std::vector<ClassWitness> classes;  // nonzero classes, sorted
  bool positive = false;
  bool multi_clock = false;
  std::size_t one_roots = 0, two_roots = 0;
  std::optional<std::size_t> expected_total, expected_one_roots;
  bool saturated = false;
};

inline constexpr std::size_t kMaxWalkBound = 16;

// Nonzero K0 classes of string complexes over reduced walks of length at most max_len.
inline PerfectClasses enumerate_perfect_classes(const Instance& in, std::size_t max_len = 10) {
  if (max_len > kMaxWalkBound)
    throw Error(ErrorKind::Bound, "BoundTooLarge", "walk length bound " + std::to_string(max_len) + " exceeds " +
                                                       std::to_string(kMaxWalkBound));
  PerfectClasses out;
  std::map<IntVector, ClassWitness> seen;
  for (const auto& w : reduced_walks(in.rib, max_len)) {
    for (int m : {0, 1}) {
      IntVector c = k0_class(in.rib, m, w);
      if (is_zero(c)) continue;
      auto [cm, cw] = canonical_rep(in.rib, m, w);
      auto it = seen.find(c);
      if (it == seen.end() || cw.length() < it->second.walk.length()) seen[c] = {c, cm, cw};
    }
  }
  for (auto& [c, wit] : seen) {
    out.classes.push_back(wit);
    RootClass rc = root_classify(in.cartan, c);
    if (rc == RootClass::One) ++out.one_roots;
    if (rc == RootClass::Two) ++out.two_roots;
  }
  IntMatrix gram = in.cartan + in.cartan.transpose();
  out.positive = rank_corank(gram).corank == 0;
  out.multi_clock = is_bipartite(in.rib);
  if (out.positive) {
    std::size_t n = in.n();
    out.expected_total = out.multi_clock ? n * n + n : 2 * n * n;
    if (!out.multi_clock) out.expected_one_roots = 2 * (n * n - n);
    if (out.classes.size() > *out.expected_total) throw internal_mismatch("more perfect classes than the root count allows");
    out.saturated = out.classes.size() == *out.expected_total &&
                    (!out.expected_one_roots || out.one_roots == *out.expected_one_roots);
  }
  return out;
}

struct ARTriangle {
  StringComplex start;
  std::vector<StringComplex> middle;
  StringComplex end;
  int m_shift = 0;
};

inline ARTriangle ar_translate(const Instance& in, int m, const Walk& w) {
  if (w.trivial()) throw walk_error("TrivialInput", "AR translation needs a nontrivial walk");
  PlusOps p = plus_ops(in.rib, in.aw, w);
  ARTriangle t;
  t.m_shift = p.m_shift;
  t.start = build_string_complex(in.rib, m, w);
  if (!p.left.trivial()) t.middle.push_back(build_string_complex(in.rib, m + p.m_shift, p.left));
  if (!p.right.trivial()) t.middle.push_back(build_string_complex(in.rib, m, p.right));
  if (p.both.trivial()) throw internal_mismatch("both-sided plus walk is trivial");
  t.end = build_string_complex(in.rib, m + p.m_shift, p.both);
  IntVector sum = k0_class(in.rib, t.start) + k0_class(in.rib, t.end);
  for (const auto& x : t.middle) sum = sum - k0_class(in.rib, x);
  if (!is_zero(sum)) throw internal_mismatch("K0 classes of the AR triangle do not cancel");
  return t;
}

}  // namespace gentlekit
