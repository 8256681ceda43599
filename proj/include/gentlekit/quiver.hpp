#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace gentlekit {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A bound quiver with length-two monomial relations. A relation (a, b) stands for the path a.b: first b, then a.
struct BoundQuiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::set<std::pair<int, int>> relations;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_arrows() const { return arrows.size(); }

  int vertex_index(const std::string& id) const {
    auto it = std::find(vertices.begin(), vertices.end(), id);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
  }
  int arrow_index(const std::string& name) const {
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (arrows[a].name == name) return static_cast<int>(a);
    return -1;
  }
  bool in_ideal(int a, int b) const { return relations.count({a, b}) > 0; }
  bool composable(int a, int b) const { return arrows[b].target == arrows[a].source; }

  friend bool operator==(const BoundQuiver&, const BoundQuiver&) = default;
};

namespace detail {

struct Token {
  std::string text;
  int line = 1;
  int col = 1;
};

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '+';
}

inline std::string at(const Token& t) {
  return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col);
}

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({"->", line, col});
      advance(2);
    } else if (c == ';' || c == ':' || c == '.') {
      out.push_back({std::string(1, c), line, col});
      advance(1);
    } else if (ident_char(c)) {
      Token t{"", line, col};
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      t.text = text.substr(i, j - i);
      out.push_back(t);
      advance(j - i);
    } else {
      throw parse_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                        ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  return out;
}

inline bool is_ident(const std::string& s) { return !s.empty() && ident_char(s[0]); }

inline bool connected(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return false;
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = n;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace detail

// Checks the bound-quiver invariants shared by the parser and programmatic constructors.
inline void check_bound_quiver(const BoundQuiver& q) {
  if (q.arrows.empty()) throw validation_error("NoArrows", "a bound quiver needs at least one arrow");
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : q.arrows) edges.push_back({a.source, a.target});
  if (!detail::connected(q.vertices.size(), edges)) throw validation_error("Disconnected", "the quiver is not connected");
  for (auto [a, b] : q.relations)
    if (!q.composable(a, b))
      throw validation_error("NonComposableRelation",
                             "relation " + q.arrows[a].name + "." + q.arrows[b].name + " is not a path");
}

inline BoundQuiver parse_quiver(const std::string& text) {
  using detail::Token;
  auto toks = detail::tokenize(text);
  BoundQuiver q;
  std::size_t i = 0;
  auto eof_token = [&]() {
    Token t = toks.empty() ? Token{"", 1, 1} : toks.back();
    return t;
  };
  auto peek = [&]() -> const Token* { return i < toks.size() ? &toks[i] : nullptr; };
  auto next = [&](const std::string& what) -> Token {
    if (i >= toks.size()) throw parse_error(detail::at(eof_token()) + ": unexpected end of input, expected " + what);
    return toks[i++];
  };
  auto expect = [&](const std::string& lit) {
    Token t = next("'" + lit + "'");
    if (t.text != lit) throw parse_error(detail::at(t) + ": expected '" + lit + "', found '" + t.text + "'");
  };
  auto ident = [&](const std::string& what) {
    Token t = next(what);
    if (!detail::is_ident(t.text)) throw parse_error(detail::at(t) + ": expected " + what + ", found '" + t.text + "'");
    return t;
  };
  auto vertex_ref = [&](const Token& t) {
    int v = q.vertex_index(t.text);
    if (v < 0) throw validation_error("UnknownVertex", detail::at(t) + ": vertex '" + t.text + "' is not declared");
    return v;
  };

  while (const Token* head = peek()) {
    Token kw = *head;
    ++i;
    if (kw.text == "vertices") {
      bool any = false;
      while (peek() && peek()->text != ";") {
        Token v = ident("vertex id");
        if (q.vertex_index(v.text) >= 0)
          throw validation_error("DuplicateVertex", detail::at(v) + ": vertex '" + v.text + "' declared twice");
        q.vertices.push_back(v.text);
        any = true;
      }
      if (!any) throw parse_error(detail::at(kw) + ": 'vertices' needs at least one id");
      expect(";");
    } else if (kw.text == "arrow") {
      Token name = ident("arrow name");
      expect(":");
      Token src = ident("source vertex");
      expect("->");
      Token tgt = ident("target vertex");
      expect(";");
      if (q.arrow_index(name.text) >= 0)
        throw validation_error("DuplicateArrow", detail::at(name) + ": arrow '" + name.text + "' declared twice");
      q.arrows.push_back({name.text, vertex_ref(src), vertex_ref(tgt)});
    } else if (kw.text == "rel") {
      std::vector<Token> names{ident("arrow name")};
      while (peek() && peek()->text == ".") {
        ++i;
        names.push_back(ident("arrow name"));
      }
      expect(";");
      if (names.size() != 2)
        throw validation_error("RelationLength", detail::at(kw) + ": relations must have length 2, got " +
                                                     std::to_string(names.size()));
      int a = q.arrow_index(names[0].text), b = q.arrow_index(names[1].text);
      if (a < 0) throw validation_error("UnknownArrow", detail::at(names[0]) + ": arrow '" + names[0].text + "' is not declared");
      if (b < 0) throw validation_error("UnknownArrow", detail::at(names[1]) + ": arrow '" + names[1].text + "' is not declared");
      if (!q.composable(a, b))
        throw validation_error("NonComposableRelation", detail::at(kw) + ": " + names[0].text + "." + names[1].text +
                                                            " is not a path (target of " + names[1].text +
                                                            " differs from source of " + names[0].text + ")");
      q.relations.insert({a, b});
    } else {
      throw parse_error(detail::at(kw) + ": unknown statement '" + kw.text + "'");
    }
  }
  check_bound_quiver(q);
  return q;
}

inline std::string render(const BoundQuiver& q) {
  std::ostringstream os;
  os << "vertices";
  for (const auto& v : q.vertices) os << ' ' << v;
  os << ";\n";
  for (const auto& a : q.arrows) os << "arrow " << a.name << ": " << q.vertices[a.source] << " -> " << q.vertices[a.target] << ";\n";
  std::vector<std::pair<int, int>> rels(q.relations.begin(), q.relations.end());
  std::sort(rels.begin(), rels.end(), [&](auto x, auto y) {
    return std::tie(q.arrows[x.first].name, q.arrows[x.second].name) < std::tie(q.arrows[y.first].name, q.arrows[y.second].name);
  });
  for (auto [a, b] : rels) os << "rel " << q.arrows[a].name << "." << q.arrows[b].name << ";\n";
  return os.str();
}

// A thread alpha_1 ... alpha_l with alpha_1 traversed last. centers[0] = t(alpha_1), centers[t] = s(alpha_t).
struct Thread {
  std::string id;
  std::vector<int> arrows;
  std::vector<int> centers;

  bool trivial() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  int target() const { return centers.front(); }
  int source() const { return centers.back(); }
};

class GentleQuiver {
 public:
  BoundQuiver base;
  std::vector<Thread> permitted;
  std::vector<Thread> forbidden;
  std::vector<std::vector<int>> full_cycles;
  bool finite_gl_dim = true;

  // perm_succ[a] is the arrow g with g.a a nonzero path; rel_succ[a] the arrow g with g.a in I; -1 if none.
  std::vector<int> perm_succ, perm_pred, rel_succ, rel_pred;
  // Position of each arrow inside its permitted (resp. forbidden) thread, 1-based; -1 for full-cycle arrows.
  std::vector<int> arrow_thread, arrow_pos, arrow_fthread, arrow_fpos;

  std::size_t n() const { return base.num_vertices(); }
  const std::string& arrow_name(int a) const { return base.arrows[a].name; }

  std::string thread_str(const Thread& t) const {
    if (t.trivial()) return "e" + base.vertices[t.centers[0]];
    std::string s;
    for (int a : t.arrows) s += (s.empty() ? "" : " ") + arrow_name(a);
    return s;
  }

  int permitted_index(const std::string& id) const {
    for (std::size_t k = 0; k < permitted.size(); ++k)
      if (permitted[k].id == id) return static_cast<int>(k);
    return -1;
  }

  std::vector<int> in_arrows(int v) const {
    std::vector<int> r;
    for (std::size_t a = 0; a < base.arrows.size(); ++a)
      if (base.arrows[a].target == v) r.push_back(static_cast<int>(a));
    return r;
  }
  std::vector<int> out_arrows(int v) const {
    std::vector<int> r;
    for (std::size_t a = 0; a < base.arrows.size(); ++a)
      if (base.arrows[a].source == v) r.push_back(static_cast<int>(a));
    return r;
  }
};

namespace detail {

// Trivial thread at v: degree one, or exactly one in-arrow b and one out-arrow a with (a.b in I) == want_rel.
inline bool has_trivial_thread(const GentleQuiver& g, int v, bool want_rel) {
  auto in = g.in_arrows(v), out = g.out_arrows(v);
  if (in.size() + out.size() == 1) return true;
  if (in.size() == 1 && out.size() == 1) return g.base.in_ideal(out[0], in[0]) == want_rel;
  return false;
}

inline std::string smallest_name(const GentleQuiver& g, const std::vector<int>& arrows) {
  std::string best = g.arrow_name(arrows[0]);
  for (int a : arrows) best = std::min(best, g.arrow_name(a));
  return best;
}

// Maximal chains of succ; chains are listed last-traversed first. Cycles are returned separately.
inline std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> chains(
    const GentleQuiver& g, const std::vector<int>& succ, const std::vector<int>& pred) {
  const std::size_t m = succ.size();
  std::vector<char> seen(m, 0);
  std::vector<std::vector<int>> open, cycles;
  for (std::size_t a = 0; a < m; ++a) {
    if (pred[a] != -1) continue;
    std::vector<int> walk;
    for (int x = static_cast<int>(a); x != -1; x = succ[x]) {
      walk.push_back(x);
      seen[x] = 1;
    }
    std::reverse(walk.begin(), walk.end());
    open.push_back(walk);
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (seen[a]) continue;
    std::vector<int> walk;
    for (int x = static_cast<int>(a); !seen[x]; x = succ[x]) {
      walk.push_back(x);
      seen[x] = 1;
    }
    std::reverse(walk.begin(), walk.end());
    auto it = std::min_element(walk.begin(), walk.end(),
                               [&](int x, int y) { return g.arrow_name(x) < g.arrow_name(y); });
    std::rotate(walk.begin(), it, walk.end());
    cycles.push_back(walk);
  }
  return {open, cycles};
}

inline std::vector<Thread> make_threads(const GentleQuiver& g, const std::vector<std::vector<int>>& paths, bool forbidden) {
  std::vector<Thread> nontrivial, trivial;
  for (const auto& p : paths) {
    Thread t;
    t.arrows = p;
    t.id = smallest_name(g, p);
    t.centers.push_back(g.base.arrows[p[0]].target);
    for (int a : p) t.centers.push_back(g.base.arrows[a].source);
    nontrivial.push_back(t);
  }
  std::sort(nontrivial.begin(), nontrivial.end(), [](const Thread& x, const Thread& y) { return x.id < y.id; });
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (!has_trivial_thread(g, static_cast<int>(v), forbidden)) continue;
    Thread t;
    t.id = "triv:" + g.base.vertices[v];
    t.centers = {static_cast<int>(v)};
    trivial.push_back(t);
  }
  nontrivial.insert(nontrivial.end(), trivial.begin(), trivial.end());
  return nontrivial;
}

}  // namespace detail

inline GentleQuiver validate_gentle(const BoundQuiver& q) {
  check_bound_quiver(q);
  GentleQuiver g;
  g.base = q;
  const std::size_t n = q.num_vertices(), m = q.num_arrows();
  for (std::size_t v = 0; v < n; ++v) {
    int out = 0, in = 0;
    for (const auto& a : q.arrows) {
      out += a.source == static_cast<int>(v);
      in += a.target == static_cast<int>(v);
    }
    if (out > 2 || in > 2)
      throw validation_error("GentlenessViolation", "condition (a) fails at vertex " + q.vertices[v] + ": " +
                                                         std::to_string(out) + " outgoing, " + std::to_string(in) +
                                                         " incoming arrows");
  }
  g.perm_succ.assign(m, -1);
  g.perm_pred.assign(m, -1);
  g.rel_succ.assign(m, -1);
  g.rel_pred.assign(m, -1);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      if (!q.composable(static_cast<int>(a), static_cast<int>(b))) continue;
      bool rel = q.in_ideal(static_cast<int>(a), static_cast<int>(b));
      auto& succ = rel ? g.rel_succ : g.perm_succ;
      auto& pred = rel ? g.rel_pred : g.perm_pred;
      if (succ[b] != -1)
        throw validation_error("GentlenessViolation", std::string("condition (") + (rel ? "c" : "b") +
                                                           ") fails at arrow " + q.arrows[b].name + ": " +
                                                           q.arrows[succ[b]].name + " and " + q.arrows[a].name +
                                                           " both follow it " + (rel ? "inside I" : "outside I"));
      if (pred[a] != -1)
        throw validation_error("GentlenessViolation", std::string("condition (") + (rel ? "c" : "b") +
                                                           ") fails at arrow " + q.arrows[a].name + ": " +
                                                           q.arrows[pred[a]].name + " and " + q.arrows[b].name +
                                                           " both precede it " + (rel ? "inside I" : "outside I"));
      succ[b] = static_cast<int>(a);
      pred[a] = static_cast<int>(b);
    }
  }
  auto [perm_paths, perm_cycles] = detail::chains(g, g.perm_succ, g.perm_pred);
  if (!perm_cycles.empty()) {
    std::string c;
    for (int a : perm_cycles[0]) c += (c.empty() ? "" : " ") + q.arrows[a].name;
    throw validation_error("NotAdmissible", "permitted cycle " + c + " gives unbounded nonzero paths");
  }
  auto [rel_paths, rel_cycles] = detail::chains(g, g.rel_succ, g.rel_pred);
  g.permitted = detail::make_threads(g, perm_paths, false);
  g.forbidden = detail::make_threads(g, rel_paths, true);
  std::sort(rel_cycles.begin(), rel_cycles.end(),
            [&](const auto& x, const auto& y) { return q.arrows[x[0]].name < q.arrows[y[0]].name; });
  g.full_cycles = rel_cycles;
  g.finite_gl_dim = g.full_cycles.empty();

  g.arrow_thread.assign(m, -1);
  g.arrow_pos.assign(m, -1);
  g.arrow_fthread.assign(m, -1);
  g.arrow_fpos.assign(m, -1);
  for (std::size_t k = 0; k < g.permitted.size(); ++k)
    for (std::size_t t = 0; t < g.permitted[k].arrows.size(); ++t) {
      g.arrow_thread[g.permitted[k].arrows[t]] = static_cast<int>(k);
      g.arrow_pos[g.permitted[k].arrows[t]] = static_cast<int>(t + 1);
    }
  for (std::size_t k = 0; k < g.forbidden.size(); ++k)
    for (std::size_t t = 0; t < g.forbidden[k].arrows.size(); ++t) {
      g.arrow_fthread[g.forbidden[k].arrows[t]] = static_cast<int>(k);
      g.arrow_fpos[g.forbidden[k].arrows[t]] = static_cast<int>(t + 1);
    }
  if (g.permitted.size() != 2 * n - m)
    throw internal_mismatch("expected 2|Q0|-|Q1| permitted threads, found " + std::to_string(g.permitted.size()));
  return g;
}

inline GentleQuiver parse_gentle(const std::string& text) { return validate_gentle(parse_quiver(text)); }

// Entry (j, i) counts nonzero paths from i to j; every such path is a subpath of exactly one permitted thread.
inline IntMatrix cartan_matrix(const GentleQuiver& g) {
  IntMatrix c = IntMatrix::identity(g.n());
  for (const auto& th : g.permitted)
    for (std::size_t s = 0; s < th.centers.size(); ++s)
      for (std::size_t t = s + 1; t < th.centers.size(); ++t) c(th.centers[s], th.centers[t]) += 1;
  return c;
}

// The unique almost-full cycle at each vertex, as its length; nullopt where there is none.
inline std::vector<std::optional<std::size_t>> almost_full_cycles(const GentleQuiver& g) {
  std::vector<std::optional<std::size_t>> r(g.n());
  for (std::size_t x = 0; x < g.base.num_arrows(); ++x) {
    int i = g.base.arrows[x].source;
    std::size_t len = 1;
    int y = static_cast<int>(x);
    while (g.base.arrows[y].target != i) {
      y = g.rel_succ[y];
      if (y == -1 || y == static_cast<int>(x) || len > g.base.num_arrows()) break;
      ++len;
    }
    if (y == -1 || g.base.arrows[y].target != i) continue;
    if (g.rel_succ[y] == static_cast<int>(x)) continue;
    if (r[i] && *r[i] != len) throw internal_mismatch("two almost-full cycles at vertex " + g.base.vertices[i]);
    r[i] = len;
  }
  return r;
}

// A thread self-crosses at v when it has two centers equal to v.
inline std::vector<bool> self_crossing_vertices(const std::vector<Thread>& threads, std::size_t n) {
  std::vector<bool> r(n, false);
  for (const auto& th : threads) {
    std::vector<int> count(n, 0);
    for (int c : th.centers)
      if (++count[c] == 2) r[c] = true;
  }
  return r;
}

struct StringFunctionPair {
  std::vector<int> S;
  std::vector<int> T;
  friend bool operator==(const StringFunctionPair&, const StringFunctionPair&) = default;
  friend auto operator<=>(const StringFunctionPair&, const StringFunctionPair&) = default;
};

// Conditions (1)-(3): parallel sources get opposite S, parallel targets opposite T, and b.a in I iff T(a) = S(b).
inline bool is_string_function_pair(const BoundQuiver& q, const StringFunctionPair& p) {
  const std::size_t m = q.num_arrows();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      if (q.arrows[a].source == q.arrows[b].source && p.S[a] == p.S[b]) return false;
      if (q.arrows[a].target == q.arrows[b].target && p.T[a] == p.T[b]) return false;
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (q.arrows[a].target != q.arrows[b].source) continue;
      bool rel = q.in_ideal(static_cast<int>(b), static_cast<int>(a));
      if (rel != (p.T[a] == p.S[b])) return false;
    }
  return true;
}

}  // namespace gentlekit
