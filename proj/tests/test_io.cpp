#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gentlekit/io.hpp"

using namespace gentlekit;

TEST(Json, IntegersAreStrings) {
  json m = to_json(IntMatrix{{1, -2}, {3, 4}});
  EXPECT_EQ(m.dump(), R"([["1","-2"],["3","4"]])");
  EXPECT_EQ(to_json(IntPolynomial{-1, 0, 1}).dump(), R"(["-1","0","1"])");
}

TEST(Json, AnalysisIsDeterministic) {
  for (const auto& n : fixtures::named()) {
    std::string a = analysis_json(fixtures::instance(n)).dump(2);
    std::string b = analysis_json(fixtures::instance(n)).dump(2);
    EXPECT_EQ(a, b) << n;
  }
}

TEST(Json, AnalysisFields) {
  json j = analysis_json(fixtures::instance("triple1"));
  EXPECT_EQ(j["aagText"], "{(4,6)}");
  EXPECT_EQ(j["coxeter"]["polyText"], "z^5 - z^4 - z + 1");
  EXPECT_EQ(j["euler"]["dynkinProjectives"], "D4");
  EXPECT_EQ(j["euler"]["nabla"], 0);
  EXPECT_EQ(j["fingerprint"]["numFaces"], 1);
  EXPECT_TRUE(j["globalDimensionFinite"].get<bool>());
}

TEST(Json, RibbonRoundTrip) {
  for (const auto& n : fixtures::named()) {
    Instance in = fixtures::instance(n);
    RibbonGraph back = parse_ribbon_json(ribbon_to_json(in.rib).dump()).graph;
    EXPECT_EQ(back.num_vertices(), in.rib.num_vertices());
    EXPECT_EQ(back.order, in.rib.order) << n;
    EXPECT_EQ(back.iota, in.rib.iota) << n;
  }
}

TEST(Json, RibbonFixture) {
  ParsedRibbon p = parse_ribbon_json(read_file(fixtures::data_path("theta.rgraph.json")));
  EXPECT_EQ(p.graph.num_vertices(), 2u);
  EXPECT_EQ(p.graph.num_edges(), 3u);
  EXPECT_EQ(p.graph.edge_ids, (std::vector<std::string>{"1", "2", "3"}));
  Instance in(from_ribbon(p.graph));
  EXPECT_EQ(in.n(), 3u);
  EXPECT_TRUE(is_bipartite(in.rib));
}

TEST(Json, RibbonErrors) {
  auto code = [](const std::string& text) {
    try {
      parse_ribbon_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return std::string();
  };
  EXPECT_EQ(code("{"), "SyntaxError");
  EXPECT_EQ(code(R"({"vertices":[]})"), "SyntaxError");
  EXPECT_EQ(code(R"({"vertices":[{"id":"x","halfEdges":["p","q"]}],"iota":[["p","r"]]})"), "UnknownHalfEdge");
  EXPECT_EQ(code(R"({"vertices":[{"id":"x","halfEdges":["p","q","r"]}],"iota":[["p","q"]]})"), "BadInvolution");
  EXPECT_EQ(code(R"({"vertices":[{"id":"x","halfEdges":["p","q"]},{"id":"y","halfEdges":["r","s"]}],"iota":[["p","q"],["r","s"]]})"),
            "Disconnected");
}

TEST(Io, MissingFile) {
  try {
    read_file(fixtures::data_path("missing.quiver"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "FileNotFound");
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}
