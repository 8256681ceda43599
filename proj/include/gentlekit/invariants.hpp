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
#include "linalg.hpp"
#include "quiver.hpp"
#include "ribbon.hpp"
#include "walks.hpp"

namespace gentlekit {

// A gentle quiver together with its marked ribbon graph and Cartan matrix.
struct Instance {
  GentleQuiver g;
  RibbonGraph rib;
  IntMatrix cartan;
  AntiWalks aw;

  Instance() = default;
  explicit Instance(GentleQuiver q, const std::set<std::string>& flips = {})
      : g(std::move(q)), rib(to_ribbon(g, flips)), cartan(cartan_matrix(g)), aw(anti_walks(rib)) {}

  std::size_t n() const { return g.n(); }
  long nq0() const { return static_cast<long>(g.base.num_vertices()); }
  long nq1() const { return static_cast<long>(g.base.num_arrows()); }
};

// Phi1: permitted -> forbidden, matching targets and terminating arrows.
inline std::vector<int> phi1(const GentleQuiver& g) {
  std::vector<int> out;
  for (const auto& eta : g.permitted) {
    std::vector<int> cand;
    for (std::size_t k = 0; k < g.forbidden.size(); ++k) {
      const auto& th = g.forbidden[k];
      if (!eta.trivial()) {
        if (th.target() == eta.target() && (th.trivial() || th.arrows.front() != eta.arrows.front()))
          cand.push_back(static_cast<int>(k));
      } else {
        int i = eta.centers[0];
        auto in = g.in_arrows(i);
        if (!in.empty()) {
          if (!th.trivial() && th.arrows.front() == in[0]) cand.push_back(static_cast<int>(k));
        } else if (th.trivial() && th.centers[0] == i) {
          cand.push_back(static_cast<int>(k));
        }
      }
    }
    if (cand.size() != 1) throw internal_mismatch("Phi1 is not well defined at thread " + eta.id);
    out.push_back(cand[0]);
  }
  return out;
}

// Phi2: forbidden -> permitted, matching sources and starting arrows.
inline std::vector<int> phi2(const GentleQuiver& g) {
  std::vector<int> out;
  for (const auto& th : g.forbidden) {
    std::vector<int> cand;
    for (std::size_t k = 0; k < g.permitted.size(); ++k) {
      const auto& eta = g.permitted[k];
      if (!th.trivial()) {
        if (eta.source() == th.source() && (eta.trivial() || eta.arrows.back() != th.arrows.back()))
          cand.push_back(static_cast<int>(k));
      } else {
        int i = th.centers[0];
        auto outa = g.out_arrows(i);
        if (!outa.empty()) {
          if (!eta.trivial() && eta.arrows.back() == outa[0]) cand.push_back(static_cast<int>(k));
        } else if (eta.trivial() && eta.centers[0] == i) {
          cand.push_back(static_cast<int>(k));
        }
      }
    }
    if (cand.size() != 1) throw internal_mismatch("Phi2 is not well defined at thread " + th.id);
    out.push_back(cand[0]);
  }
  return out;
}

using AAG = std::map<std::pair<long, long>, long>;

inline std::string aag_str(const AAG& a) {
  std::string s = "{";
  bool first = true;
  for (const auto& [nm, c] : a)
    for (long k = 0; k < c; ++k) {
      s += (first ? "" : ",") + std::string("(") + std::to_string(nm.first) + "," + std::to_string(nm.second) + ")";
      first = false;
    }
  return s + "}";
}

inline AAG aag_from_faces(const RibbonGraph& r) {
  AAG a;
  for (const auto& f : faces(r)) {
    if ((f.length - f.closed_degree) % 2) throw internal_mismatch("face with odd length minus closed degree");
    if (!f.full && static_cast<std::size_t>(f.n()) != f.factors.size())
      throw internal_mismatch("anti-walk factor count differs from (l - deg)/2");
    if (f.full && f.closed_degree != f.length) throw internal_mismatch("full face with l != closed degree");
    a[{f.n(), f.m()}] += 1;
  }
  return a;
}

inline AAG aag_from_orbits(const GentleQuiver& g) {
  AAG a;
  if (!g.forbidden.empty()) {
    auto p1 = phi1(g), p2 = phi2(g);
    std::vector<char> seen(g.forbidden.size(), 0);
    for (std::size_t s = 0; s < g.forbidden.size(); ++s) {
      if (seen[s]) continue;
      long n = 0, m = 0;
      for (int x = static_cast<int>(s); !seen[x]; x = p1[p2[x]]) {
        seen[x] = 1;
        ++n;
        m += static_cast<long>(g.forbidden[x].length());
      }
      a[{n, m}] += 1;
    }
  }
  for (const auto& cyc : g.full_cycles) a[{0, static_cast<long>(cyc.size())}] += 1;
  return a;
}

inline AAG aag_invariant(const Instance& in) {
  AAG f = aag_from_faces(in.rib), o = aag_from_orbits(in.g);
  if (f != o) throw internal_mismatch("AAG from faces " + aag_str(f) + " differs from AAG from orbits " + aag_str(o));
  return f;
}

struct EulerAnalysis {
  IntMatrix gram_projectives;
  std::optional<IntMatrix> gram_simples;
  int nabla = 0;
  std::size_t rank = 0, corank = 0;
  std::string dynkin_projectives;
  std::optional<std::string> dynkin_simples;
  bool unit_projectives = false;
  std::optional<bool> unit_simples;
  std::optional<bool> connected_simples;
};

namespace detail {

inline bool gram_connected(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0) != 0;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> st{0};
  seen[0] = 1;
  while (!st.empty()) {
    std::size_t i = st.back();
    st.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && m(i, j) != 0 && !seen[j]) {
        seen[j] = 1;
        st.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

inline std::string dynkin(bool unit, int nabla, long vg, std::size_t rank) {
  std::string r = std::to_string(rank);
  if (unit) return (nabla == 0 && vg >= 4 ? "D" : "A") + r;
  return vg >= 2 ? "C" + r : "HalfA1";
}

}  // namespace detail

inline EulerAnalysis euler_analysis(const Instance& in) {
  EulerAnalysis e;
  const IntMatrix& c = in.cartan;
  e.gram_projectives = c + c.transpose();
  IntMatrix inc = incidence_matrix(in.rib);
  if (inc * inc.transpose() != e.gram_projectives) throw internal_mismatch("C + C^tr differs from Inc(G) Inc(G)^tr");
  e.nabla = is_bipartite(in.rib) ? 1 : 0;
  auto rc = rank_corank(e.gram_projectives);
  e.rank = rc.rank;
  e.corank = rc.corank;
  if (static_cast<long>(e.corank) != in.nq1() - in.nq0() + e.nabla)
    throw internal_mismatch("corank differs from |Q1| - |Q0| + nabla");
  auto crossing = self_crossing_vertices(in.g.permitted, in.n());
  e.unit_projectives = true;
  for (std::size_t i = 0; i < in.n(); ++i) {
    BigInt want = crossing[i] ? 2 : 1;
    if (c(i, i) != want) throw internal_mismatch("diagonal of C disagrees with self-crossings at " + in.g.base.vertices[i]);
    if (c(i, i) != 1) e.unit_projectives = false;
  }
  const long vg = 2 * in.nq0() - in.nq1();
  if (!e.unit_projectives && e.nabla != 0) throw internal_mismatch("non-unit form with nabla = 1");
  e.dynkin_projectives = detail::dynkin(e.unit_projectives, e.nabla, vg, e.rank);

  if (in.g.finite_gl_dim) {
    ForbiddenRibbon fr = forbidden_ribbon(in.g);
    IntMatrix finc = incidence_matrix(fr.graph, fr.sigma_hat);
    IntMatrix gs = finc * finc.transpose();
    if (c * gs * c.transpose() != e.gram_projectives) throw internal_mismatch("C (Inc Inc^tr) C^tr differs from C + C^tr");
    auto afc = almost_full_cycles(in.g);
    bool unit = true;
    for (std::size_t i = 0; i < in.n(); ++i) {
      BigInt want = !afc[i] ? 2 : (*afc[i] % 2 ? 0 : 4);
      if (gs(i, i) != want) throw internal_mismatch("simples diagonal disagrees with almost-full cycles at " + in.g.base.vertices[i]);
      if (gs(i, i) != 2) unit = false;
    }
    e.gram_simples = gs;
    e.unit_simples = unit;
    e.connected_simples = detail::gram_connected(gs);
    if (!*e.connected_simples)
      e.dynkin_simples = "Disconnected";
    else
      e.dynkin_simples = detail::dynkin(unit, e.nabla, vg, e.rank);
  }
  return e;
}

// Columns are incidence vectors of the anti-walks OT(alpha).
inline IntMatrix anti_walk_matrix(const Instance& in) {
  IntMatrix j(in.rib.num_edges(), in.rib.num_vertices());
  for (std::size_t v = 0; v < in.rib.num_vertices(); ++v) j.set_column(v, incidence_vector(in.rib, in.aw.ot[v]));
  return j;
}

inline IntPolynomial coxeter_from_aag(const AAG& a, long nq0, long nq1) {
  IntPolynomial p{1};
  for (const auto& [nm, cnt] : a) {
    auto [n, m] = nm;
    if (n == 0) continue;
    IntPolynomial f = IntPolynomial::monomial(static_cast<std::size_t>(n)) - IntPolynomial{(n + m) % 2 == 0 ? 1 : -1};
    p = p * f.pow(static_cast<unsigned>(cnt));
  }
  long k = nq1 - nq0;
  IntPolynomial zm1{-1, 1};
  if (k >= 0) return p * zm1.pow(static_cast<unsigned>(k));
  for (long i = 0; i < -k; ++i) p = p.divide_exact(zm1);
  return p;
}

struct CoxeterReport {
  IntMatrix matrix;
  IntMatrix inverse;
  IntPolynomial poly;
  IntPolynomial poly_from_aag;
};

inline CoxeterReport coxeter(const Instance& in, const AAG& aag) {
  CoxeterReport r;
  const std::size_t n = in.n();
  IntMatrix j = anti_walk_matrix(in);
  IntMatrix jj = j * j.transpose();
  r.matrix = IntMatrix::identity(n) - jj * in.cartan.transpose();
  r.inverse = IntMatrix::identity(n) - jj * in.cartan;
  if (r.matrix * r.inverse != IntMatrix::identity(n)) throw internal_mismatch("Coxeter matrix inverse check failed");
  if (in.g.finite_gl_dim && in.cartan * r.matrix != BigInt(-1) * in.cartan.transpose())
    throw internal_mismatch("Coxeter matrix differs from -C^{-1} C^tr");
  r.poly = char_poly(r.matrix);
  r.poly_from_aag = coxeter_from_aag(aag, in.nq0(), in.nq1());
  if (r.poly != r.poly_from_aag)
    throw internal_mismatch("characteristic polynomial " + r.poly.str() + " differs from AAG product " + r.poly_from_aag.str());
  return r;
}

inline CoxeterReport coxeter(const Instance& in) { return coxeter(in, aag_invariant(in)); }

struct Fingerprint {
  long num_q_vertices = 0, num_q_arrows = 0;
  long num_g_vertices = 0, num_g_edges = 0, num_faces = 0;
  bool bipartite = false;
  int nabla = 0;
  long corank = 0;
  BigInt det_cartan;
  AAG aag;
  IntPolynomial coxeter_poly;
  std::map<std::pair<int, int>, int> face_profile;
};

inline Fingerprint fingerprint(const Instance& in) {
  Fingerprint f;
  f.num_q_vertices = in.nq0();
  f.num_q_arrows = in.nq1();
  f.num_g_vertices = static_cast<long>(in.rib.num_vertices());
  f.num_g_edges = static_cast<long>(in.rib.num_edges());
  auto fs = faces(in.rib);
  f.num_faces = static_cast<long>(fs.size());
  for (const auto& x : fs) f.face_profile[{x.length, x.closed_degree}] += 1;
  f.bipartite = is_bipartite(in.rib);
  auto e = euler_analysis(in);
  f.nabla = e.nabla;
  f.corank = static_cast<long>(e.corank);
  f.det_cartan = determinant(in.cartan);
  f.aag = aag_invariant(in);
  f.coxeter_poly = coxeter(in, f.aag).poly;
  return f;
}

struct Comparison {
  std::vector<std::string> differing;
  bool not_derived_equivalent() const { return !differing.empty(); }
  std::string verdict() const { return differing.empty() ? "inconclusive" : "not derived equivalent"; }
};

inline Comparison compare(const Fingerprint& a, const Fingerprint& b) {
  Comparison c;
  auto check = [&](bool same, const char* name) {
    if (!same) c.differing.push_back(name);
  };
  check(a.num_q_vertices == b.num_q_vertices, "numQVertices");
  check(a.num_q_arrows == b.num_q_arrows, "numQArrows");
  check(a.num_g_vertices == b.num_g_vertices, "numGVertices");
  check(a.num_g_edges == b.num_g_edges, "numGEdges");
  check(a.num_faces == b.num_faces, "numFaces");
  check(a.bipartite == b.bipartite, "bipartite");
  check(a.nabla == b.nabla, "nabla");
  check(a.corank == b.corank, "corank");
  check(a.det_cartan == b.det_cartan, "detCartan");
  check(a.aag == b.aag, "aag");
  check(a.coxeter_poly == b.coxeter_poly, "coxeterPoly");
  check(a.face_profile == b.face_profile, "faceProfile");
  return c;
}

}  // namespace gentlekit
