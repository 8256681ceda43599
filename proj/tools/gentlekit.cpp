#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gentlekit/brauer.hpp"
#include "gentlekit/derived.hpp"
#include "gentlekit/invariants.hpp"
#include "gentlekit/io.hpp"
#include "gentlekit/selftest.hpp"

using namespace gentlekit;

namespace {

struct Options {
  std::string format = "text";
  std::string flip;
  std::string path, path2;
  std::string walk;
  int m = 0;
  std::size_t max_len = 10;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  bool dot = false;
};

std::set<std::string> flip_set(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.insert(tok);
  return out;
}

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

Instance load(const std::string& path, const std::set<std::string>& flips) {
  std::string text = read_file(path);
  if (ends_with(path, ".json")) return Instance(from_ribbon(parse_ribbon_json(text).graph), flips);
  return Instance(parse_gentle(text), flips);
}

void print_matrix(std::ostream& os, const std::string& name, const IntMatrix& m) {
  os << name << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
}

int cmd_analyze(const Options& o) {
  Instance in = load(o.path, flip_set(o.flip));
  if (o.dot) {
    std::cout << to_dot(in.rib);
    return 0;
  }
  if (o.format == "json") {
    std::cout << analysis_json(in).dump(2) << "\n";
    return 0;
  }
  const auto& r = in.rib;
  auto e = euler_analysis(in);
  auto aag = aag_invariant(in);
  auto cox = coxeter(in, aag);
  std::cout << "quiver: " << in.nq0() << " vertices, " << in.nq1() << " arrows, gl.dim "
            << (in.g.finite_gl_dim ? "finite" : "infinite") << "\n";
  std::cout << "permitted threads:\n";
  for (const auto& t : in.g.permitted) std::cout << "  " << t.id << ": " << in.g.thread_str(t) << "\n";
  std::cout << "forbidden threads:\n";
  for (const auto& t : in.g.forbidden) std::cout << "  " << t.id << ": " << in.g.thread_str(t) << "\n";
  for (const auto& c : in.g.full_cycles) {
    std::cout << "full cycle:";
    for (int a : c) std::cout << " " << in.g.arrow_name(a);
    std::cout << "\n";
  }
  print_matrix(std::cout, "cartan", in.cartan);
  std::cout << "ribbon vertices:\n";
  for (std::size_t v = 0; v < r.num_vertices(); ++v) {
    std::cout << "  " << r.vertex_ids[v] << ":";
    for (int h : r.order[v]) std::cout << " " << r.edge_ids[r.edge_of[h]];
    std::cout << "\n";
  }
  std::cout << "orientation (edge: source -> target):\n";
  for (const auto& row : orientation_table(r))
    std::cout << "  " << row.edge << ": " << row.source_half << " -> " << row.target_half << "\n";
  std::cout << "anti-walks:\n";
  for (std::size_t v = 0; v < r.num_vertices(); ++v)
    std::cout << "  OT(" << r.vertex_ids[v] << ") = " << format_walk(r, in.aw.ot[v]) << "\n";
  std::cout << "faces:\n";
  for (const auto& f : faces(r))
    std::cout << "  " << format_walk(r, f.walk) << (f.full ? " (full)" : "") << "  length " << f.length << ", closed degree "
              << f.closed_degree << "\n";
  std::cout << "nabla: " << e.nabla << "\nrank: " << e.rank << "\ncorank: " << e.corank << "\n";
  std::cout << "dynkin (projectives): " << e.dynkin_projectives << "\n";
  if (e.dynkin_simples) std::cout << "dynkin (simples): " << *e.dynkin_simples << "\n";
  std::cout << "aag: " << aag_str(aag) << "\n";
  std::cout << "coxeter polynomial: " << cox.poly << "\n";
  std::cout << "det cartan: " << determinant(in.cartan) << "\n";
  return 0;
}

int cmd_compare(const Options& o) {
  Instance a = load(o.path, {}), b = load(o.path2, {});
  Comparison c = compare(fingerprint(a), fingerprint(b));
  if (o.format == "json") {
    std::cout << json{{"verdict", c.verdict()}, {"differing", c.differing}}.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << c.verdict() << "\n";
    for (const auto& d : c.differing) std::cout << "  differs: " << d << "\n";
  }
  return c.not_derived_equivalent() ? 1 : 0;
}

int cmd_walk(const Options& o) {
  Instance in = load(o.path, flip_set(o.flip));
  Walk w = parse_walk(o.walk, in.rib);
  if (!is_reduced(in.rib, w)) throw walk_error("NotReduced", "walk " + format_walk(in.rib, w) + " is not reduced");
  StringComplex x = build_string_complex(in.rib, o.m, w);
  IntVector cls = k0_class(in.rib, x);
  RootClass rc = root_classify(in.cartan, cls);
  ARTriangle t = ar_translate(in, o.m, w);
  WalkClass wc = classify_walk(in.rib, w);
  if (o.format == "json") {
    json mid = json::array();
    for (const auto& y : t.middle) mid.push_back({{"shift", y.shift}, {"walk", format_walk(in.rib, y.walk)}});
    json out = {{"walk", format_walk(in.rib, w)},
                {"degree", degree(in.rib, w)},
                {"classification", to_string(wc)},
                {"incidence", to_json(incidence_vector(in.rib, w))},
                {"complex", complex_json(in.rib, x)},
                {"k0", to_json(cls)},
                {"q", big_str(euler_value(in.cartan, cls))},
                {"root", to_string(rc)},
                {"arTriangle",
                 {{"mShift", t.m_shift},
                  {"start", {{"shift", t.start.shift}, {"walk", format_walk(in.rib, t.start.walk)}}},
                  {"middle", mid},
                  {"end", {{"shift", t.end.shift}, {"walk", format_walk(in.rib, t.end.walk)}}}}}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "walk: " << format_walk(in.rib, w) << "\ndegree: " << degree(in.rib, w) << "\nclass: " << to_string(wc) << "\n";
  std::cout << "complex X(" << o.m << ", w):\n";
  for (std::size_t i = 0; i < x.terms.size(); ++i)
    std::cout << "  term " << i << ": P" << in.rib.edge_ids[x.terms[i].projective] << " in degree " << x.terms[i].degree << "\n";
  for (const auto& mp : x.maps) {
    std::cout << "  map " << mp.from << " -> " << mp.to << ":";
    for (const auto& a : mp.path) std::cout << " " << a;
    std::cout << "\n";
  }
  std::cout << "k0: " << vector_str(cls) << "\nq: " << euler_value(in.cartan, cls) << " (" << to_string(rc) << ")\n";
  std::cout << "AR triangle (m(w) = " << t.m_shift << "):\n";
  std::cout << "  start: X(" << t.start.shift << ", " << format_walk(in.rib, t.start.walk) << ")\n";
  for (const auto& y : t.middle) std::cout << "  middle: X(" << y.shift << ", " << format_walk(in.rib, y.walk) << ")\n";
  std::cout << "  end: X(" << t.end.shift << ", " << format_walk(in.rib, t.end.walk) << ")\n";
  return 0;
}

int cmd_roots(const Options& o) {
  Instance in = load(o.path, flip_set(o.flip));
  PerfectClasses pc = enumerate_perfect_classes(in, o.max_len);
  if (o.format == "json") {
    json cls = json::array();
    for (const auto& c : pc.classes)
      cls.push_back({{"class", to_json(c.cls)},
                     {"root", to_string(root_classify(in.cartan, c.cls))},
                     {"shift", c.shift},
                     {"walk", format_walk(in.rib, c.walk)}});
    json out = {{"maxLen", o.max_len},      {"positive", pc.positive},       {"multiClock", pc.multi_clock},
                {"count", pc.classes.size()}, {"oneRoots", pc.one_roots},      {"twoRoots", pc.two_roots},
                {"saturated", pc.saturated},  {"classes", cls}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "nonzero classes: " << pc.classes.size() << " (1-roots " << pc.one_roots << ", 2-roots " << pc.two_roots
            << ")\n";
  std::cout << "positive: " << (pc.positive ? "yes" : "no") << ", multi-clock: " << (pc.multi_clock ? "yes" : "no") << "\n";
  if (pc.expected_total) std::cout << "expected: " << *pc.expected_total << ", saturated: " << (pc.saturated ? "yes" : "no") << "\n";
  for (const auto& c : pc.classes)
    std::cout << "  " << vector_str(c.cls) << "  " << to_string(root_classify(in.cartan, c.cls)) << "  X(" << c.shift << ", "
              << format_walk(in.rib, c.walk) << ")\n";
  return 0;
}

int cmd_aag(const Options& o) {
  Instance in = load(o.path, flip_set(o.flip));
  AAG a = aag_invariant(in);
  if (o.format == "json")
    std::cout << json{{"aag", to_json(a)}}.dump(2) << "\n";
  else
    std::cout << "aag: " << aag_str(a) << "\n";
  return 0;
}

int cmd_coxeter(const Options& o) {
  Instance in = load(o.path, flip_set(o.flip));
  CoxeterReport c = coxeter(in);
  if (o.format == "json") {
    std::cout << json{{"matrix", to_json(c.matrix)}, {"poly", to_json(c.poly)}, {"polyFromAAG", to_json(c.poly_from_aag)}}.dump(2)
              << "\n";
  } else {
    print_matrix(std::cout, "coxeter matrix", c.matrix);
    std::cout << "coxeter polynomial: " << c.poly << "\n";
  }
  return 0;
}

int cmd_brauer(const Options& o) {
  ParsedRibbon pr = parse_ribbon_json(read_file(o.path), {}, false);
  BrauerReport rep = brauer_classify(make_brauer(pr.graph, pr.multiplicity));
  if (o.format == "json") {
    json out = {{"cartan", to_json(rep.cartan)},
                {"positiveDefinite", rep.positive_definite},
                {"shape", to_string(rep.shape)},
                {"repType", rep.rep_type.empty() ? json(nullptr) : json(rep.rep_type)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  print_matrix(std::cout, "brauer cartan", rep.cartan);
  std::cout << (rep.positive_definite ? "positive-definite" : "semidefinite-singular") << "\nshape: " << to_string(rep.shape) << "\n";
  if (!rep.rep_type.empty()) std::cout << "representation type: " << rep.rep_type << "\n";
  return 0;
}

int cmd_selftest(Options o) {
  if (const char* env = std::getenv("GENTLEKIT_SEED")) o.seed = std::stoull(env);
  SelftestResult r = run_selftest(o.seed, o.count);
  if (o.format == "json") {
    std::cout << json{{"seed", o.seed}, {"instances", r.instances}, {"walks", r.walks}, {"failures", r.failures}}.dump(2) << "\n";
  } else {
    std::cout << "selftest seed " << o.seed << ": " << r.instances << " instances, " << r.walks << " walks, "
              << r.failures.size() << " failures\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    std::cout << (r.failures.empty() ? "PASS" : "FAIL") << "\n";
  }
  return r.failures.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gentlekit: derived invariants of gentle algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--flip", o.flip, "comma-separated edges whose reference orientation is reversed");

  auto* analyze = app.add_subcommand("analyze", "full invariant report");
  analyze->add_option("path", o.path)->required();
  analyze->add_flag("--dot", o.dot, "emit the ribbon graph in DOT");
  auto* cmp = app.add_subcommand("compare", "compare derived-invariant fingerprints");
  cmp->add_option("a", o.path)->required();
  cmp->add_option("b", o.path2)->required();
  auto* walk = app.add_subcommand("walk", "string complex, root class and AR triangle of a walk");
  walk->add_option("path", o.path)->required();
  walk->add_option("--walk", o.walk)->required();
  walk->add_option("--m", o.m);
  auto* roots = app.add_subcommand("roots", "classes of perfect complexes up to a walk length");
  roots->add_option("path", o.path)->required();
  roots->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
  auto* aag = app.add_subcommand("aag", "AAG invariant");
  aag->add_option("path", o.path)->required();
  auto* cox = app.add_subcommand("coxeter", "Coxeter matrix and polynomial");
  cox->add_option("path", o.path)->required();
  auto* br = app.add_subcommand("brauer", "Brauer graph Cartan matrix and classification");
  br->add_option("path", o.path)->required();
  auto* st = app.add_subcommand("selftest", "randomized property suites");
  st->add_option("--seed", o.seed);
  st->add_option("--count", o.count)->check(CLI::PositiveNumber);

  for (auto* sub : {analyze, cmp, walk, roots, aag, cox, br, st}) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--flip", o.flip, "comma-separated edges whose reference orientation is reversed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*cmp) return cmd_compare(o);
    if (*walk) return cmd_walk(o);
    if (*roots) return cmd_roots(o);
    if (*aag) return cmd_aag(o);
    if (*cox) return cmd_coxeter(o);
    if (*br) return cmd_brauer(o);
    if (*st) return cmd_selftest(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
