#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gentlekit/brauer.hpp"
#include "gentlekit/io.hpp"

using namespace gentlekit;

namespace {

// Graph on vertices v0..v{n-1} from an edge list, with per-vertex half-edge orders shuffled by rng when given.
BrauerGraph graph(int n, const std::vector<std::pair<int, int>>& edges, std::vector<long> mult = {},
                  std::mt19937_64* rng = nullptr) {
  RibbonSpec spec;
  spec.half_edges.resize(n);
  for (int v = 0; v < n; ++v) spec.vertex_ids.push_back("v" + std::to_string(v));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::string a = "h" + std::to_string(2 * e), b = "h" + std::to_string(2 * e + 1);
    spec.half_edges[edges[e].first].push_back(a);
    spec.half_edges[edges[e].second].push_back(b);
    spec.iota.push_back({a, b});
  }
  if (rng)
    for (auto& hs : spec.half_edges) std::shuffle(hs.begin(), hs.end(), *rng);
  return make_brauer(make_ribbon(spec, {}, false), mult);
}

}  // namespace

TEST(Brauer, SingleEdge) {
  EXPECT_EQ(brauer_cartan(graph(2, {{0, 1}})), (IntMatrix{{2}}));
}

TEST(Brauer, TreeIsFinite) {
  BrauerReport r = brauer_classify(graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}));
  EXPECT_TRUE(r.positive_definite);
  EXPECT_EQ(r.shape, BrauerShape::Tree);
  EXPECT_EQ(r.rep_type, "finite");
}

TEST(Brauer, TriangleIsOneDomestic) {
  BrauerReport r = brauer_classify(graph(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_TRUE(r.positive_definite);
  EXPECT_EQ(r.shape, BrauerShape::OddOneCycle);
  EXPECT_EQ(r.rep_type, "1-domestic");
}

TEST(Brauer, SquareIsSingular) {
  BrauerReport r = brauer_classify(graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  EXPECT_FALSE(r.positive_definite);
  EXPECT_EQ(r.shape, BrauerShape::Other);
}

TEST(Brauer, MultiplicitiesSuppressRepType) {
  BrauerReport r = brauer_classify(graph(3, {{0, 1}, {1, 2}}, {1, 3, 1}));
  EXPECT_TRUE(r.positive_definite);
  EXPECT_TRUE(r.rep_type.empty());
}

TEST(Brauer, DoublingAMultiplicityAddsOneBlock) {
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 2}};
  BrauerGraph base = graph(3, e);
  BrauerGraph doubled = graph(3, e, {1, 2, 1});
  IntVector c = incidence_matrix(base.graph).column(1);
  IntMatrix block(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) block(i, j) = c[i] * c[j];
  EXPECT_EQ(brauer_cartan(doubled), brauer_cartan(base) + block);
}

TEST(Brauer, BadInput) {
  EXPECT_THROW(graph(2, {{0, 1}}, {1, 0}), Error);
  EXPECT_THROW(graph(2, {{0, 1}}, {1}), Error);
}

TEST(Brauer, JsonFixtures) {
  ParsedRibbon t = parse_ribbon_json(read_file(fixtures::data_path("triangle.brauer.json")), {}, false);
  EXPECT_EQ(brauer_classify(make_brauer(t.graph, t.multiplicity)).shape, BrauerShape::OddOneCycle);
  ParsedRibbon s = parse_ribbon_json(read_file(fixtures::data_path("star.brauer.json")), {}, false);
  EXPECT_EQ(s.multiplicity, (std::vector<long>{2, 1, 1, 1}));
  BrauerReport r = brauer_classify(make_brauer(s.graph, s.multiplicity));
  EXPECT_EQ(r.shape, BrauerShape::Tree);
  EXPECT_TRUE(r.rep_type.empty());
}

TEST(BrauerProperties, OrdersAndMultiplicitiesDoNotMatter) {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 300; ++k) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.push_back({static_cast<int>(rng() % v), v});
    for (int x = static_cast<int>(rng() % 3); x > 0; --x) e.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    if (e.empty()) continue;
    std::vector<long> mult(n);
    for (auto& m : mult) m = 1 + static_cast<long>(rng() % 4);
    BrauerGraph a = graph(n, e, mult, &rng), b = graph(n, e, mult, &rng);
    EXPECT_EQ(brauer_cartan(a), brauer_cartan(b));
    BrauerReport ra = brauer_classify(a);
    BrauerReport rt = brauer_classify(graph(n, e, {}, &rng));
    EXPECT_EQ(ra.positive_definite, rt.positive_definite);
    EXPECT_EQ(ra.shape, rt.shape);
  }
}
