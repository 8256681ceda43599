#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gentlekit/derived.hpp"
#include "oracles.hpp"

using namespace gentlekit;

namespace {

struct Derived : ::testing::Test {
  Instance six = fixtures::instance("sixvertex");
  Instance a1 = fixtures::instance("triple1");
  Instance loop = fixtures::instance("loop");
  Walk w(const Instance& in, const std::string& s) { return parse_walk(s, in.rib); }
};

}  // namespace

TEST_F(Derived, UnfoldedSixVertexComplex) {
  StringComplex x = build_string_complex(six.rib, 0, w(six, "2 -3 -5 4 6 -2 1"));
  ASSERT_EQ(x.terms.size(), 7u);
  ASSERT_EQ(x.maps.size(), 6u);
  std::vector<std::string> paths;
  for (const auto& m : x.maps) {
    std::string p;
    for (const auto& a : m.path) p += a;
    paths.push_back(p);
  }
  EXPECT_EQ(paths, (std::vector<std::string>{"a2a3", "c1", "b3", "d1", "a1", "b1"}));
  EXPECT_FALSE(x.maps[0].reversed);
  EXPECT_TRUE(x.maps[1].reversed);
  EXPECT_TRUE(x.maps[2].reversed);
  EXPECT_EQ(x.terms.front().degree, 0);
}

TEST_F(Derived, StalkComplex) {
  StringComplex x = build_string_complex(six.rib, 3, w(six, "4"));
  ASSERT_EQ(x.terms.size(), 1u);
  EXPECT_EQ(x.terms[0].degree, 3);
  EXPECT_EQ(six.rib.edge_ids[x.terms[0].projective], "4");
  EXPECT_TRUE(x.maps.empty());
}

TEST_F(Derived, LoopPowerComplex) {
  StringComplex x = build_string_complex(loop.rib, 0, w(loop, "1 1 1"));
  ASSERT_EQ(x.terms.size(), 3u);
  for (const auto& m : x.maps) EXPECT_EQ(m.path, std::vector<std::string>{"a1"});
  EXPECT_EQ(vector_str(k0_class(loop.rib, 0, w(loop, "1 1"))), "(0)");
  EXPECT_EQ(vector_str(k0_class(loop.rib, 0, w(loop, "1"))), "(1)");
  EXPECT_EQ(vector_str(k0_class(loop.rib, 1, w(loop, "1"))), "(-1)");
}

TEST_F(Derived, BandClass) {
  Walk belt = w(six, "3 -6 -4 5 3");
  BandComplex b{0, belt, 2};
  EXPECT_EQ(k0_class(six.rib, b), scaled(incidence_vector(six.rib, w(six, "3 -6 -4 5")), 2));
  EXPECT_EQ(root_classify(six.cartan, k0_class(six.rib, b)), RootClass::Zero);
  try {
    k0_class(six.rib, BandComplex{0, w(six, "3 -6"), 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "NotABelt");
  }
}

TEST_F(Derived, RootClasses) {
  EXPECT_EQ(root_classify(six.cartan, k0_class(six.rib, 0, w(six, "2 -3 -5 4 6 -2 1"))), RootClass::One);
  EXPECT_EQ(root_classify(loop.cartan, k0_class(loop.rib, 0, w(loop, "1"))), RootClass::Two);
  EXPECT_EQ(root_classify(loop.cartan, k0_class(loop.rib, 0, w(loop, "1 1"))), RootClass::Zero);
}

TEST_F(Derived, LoopPerfectClasses) {
  PerfectClasses pc = enumerate_perfect_classes(loop, 6);
  ASSERT_EQ(pc.classes.size(), 2u);
  EXPECT_EQ(vector_str(pc.classes[0].cls), "(-1)");
  EXPECT_EQ(vector_str(pc.classes[1].cls), "(1)");
  EXPECT_TRUE(pc.positive);
  EXPECT_TRUE(pc.saturated);
  EXPECT_THROW(enumerate_perfect_classes(loop, kMaxWalkBound + 1), Error);
}

TEST_F(Derived, TreeQuiverIsTypeA) {
  Instance in(parse_gentle("vertices 1 2 3; arrow a: 1 -> 2; arrow b: 2 -> 3; rel b.a;"));
  PerfectClasses pc = enumerate_perfect_classes(in, 8);
  EXPECT_TRUE(pc.multi_clock);
  EXPECT_EQ(pc.classes.size(), 12u);
  EXPECT_EQ(pc.one_roots, 12u);
  EXPECT_EQ(oracle::box_roots(oracle::to_mat(in.cartan + in.cartan.transpose()), 1).size(), 12u);
}

TEST_F(Derived, TripleOneTriangle) {
  ARTriangle t = ar_translate(a1, 0, w(a1, "-1 3 5"));
  EXPECT_EQ(t.m_shift, 1);
  ASSERT_EQ(t.middle.size(), 2u);
  EXPECT_EQ(format_walk(a1.rib, t.middle[0].walk), "4 -1 2 -1 3 5");
  EXPECT_EQ(t.middle[0].shift, 1);
  EXPECT_EQ(format_walk(a1.rib, t.middle[1].walk), "-1 3 5 -2 1 -4");
  EXPECT_EQ(t.middle[1].shift, 0);
  EXPECT_EQ(format_walk(a1.rib, t.end.walk), "4 -1 2 -1 3 5 -2 1 -4");
  EXPECT_EQ(t.end.shift, 1);
}

TEST_F(Derived, LoopTriangle) {
  ARTriangle t = ar_translate(loop, 0, w(loop, "1"));
  ASSERT_EQ(t.middle.size(), 1u);
  EXPECT_EQ(format_walk(loop.rib, t.middle[0].walk), "1 1");
  EXPECT_EQ(t.middle[0].shift, -1);
  EXPECT_EQ(format_walk(loop.rib, t.end.walk), "1");
  EXPECT_EQ(t.end.shift, -1);
}

TEST(DerivedProperties, ClassesFromTermsAndInverseRepresentative) {
  std::mt19937_64 rng(41);
  for (const auto& in : fixtures::random_instances(42, 150)) {
    CoxeterReport cox = coxeter(in);
    for (int k = 0; k < 10; ++k) {
      Walk x = random_reduced_walk(rng, in.rib, 7);
      int m = static_cast<int>(rng() % 5) - 2;
      StringComplex c = build_string_complex(in.rib, m, x);
      EXPECT_EQ(k0_from_terms(in.rib, c), k0_class(in.rib, m, x));
      // X(m, w) and X(m + deg w, w^-1) have the same class
      EXPECT_EQ(k0_class(in.rib, m, x), k0_class(in.rib, m + degree(in.rib, x), inverse(in.rib, x)));
      auto [cm, cw] = canonical_rep(in.rib, m, x);
      EXPECT_EQ(k0_class(in.rib, cm, cw), k0_class(in.rib, m, x));
      // Psi^-1 [start] = [end]
      ARTriangle t = ar_translate(in, m, x);
      EXPECT_EQ(cox.inverse * k0_class(in.rib, t.start), k0_class(in.rib, t.end));
    }
  }
}

TEST(DerivedProperties, OddPowersShareTheClass) {
  for (const auto& in : fixtures::random_instances(43, 150))
    for (const auto& x : reduced_walks(in.rib, 5)) {
      if (!is_closed(in.rib, x) || x.length() % 2 == 0) continue;
      Walk p3 = power(in.rib, x, 3), p5 = power(in.rib, x, 5);
      if (!is_reduced(in.rib, p3)) continue;
      EXPECT_EQ(k0_class(in.rib, 0, p3), k0_class(in.rib, 0, x));
      EXPECT_EQ(k0_class(in.rib, 0, p5), k0_class(in.rib, 0, x));
    }
}
