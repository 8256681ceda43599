#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gentlekit/walks.hpp"

using namespace gentlekit;

namespace {

struct Walks : ::testing::Test {
  Instance six = fixtures::instance("sixvertex");
  Instance a1 = fixtures::instance("triple1");
  Instance loop = fixtures::instance("loop");
  Instance two = fixtures::instance("twosided");
  Walk w(const Instance& in, const std::string& s) { return parse_walk(s, in.rib); }
  std::string f(const Instance& in, const Walk& x) { return format_walk(in.rib, x); }
};

}  // namespace

TEST_F(Walks, ParseErrors) {
  try {
    w(loop, "9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "UnknownEdge");
  }
  EXPECT_THROW(w(six, "1 4"), Error);
}

TEST_F(Walks, Degree) {
  EXPECT_EQ(degree(six.rib, w(six, "2 -3 -5 4 6 -2 1")), 2);
  EXPECT_EQ(degree(six.rib, w(six, "3")), 0);
  EXPECT_EQ(degree(six.rib, w(six, "3 -6 -4 5 3")), 0);
  EXPECT_THROW(degree(loop.rib, w(loop, "1 -1")), Error);
}

TEST_F(Walks, IncidenceVector) {
  EXPECT_EQ(vector_str(incidence_vector(six.rib, w(six, "2 -3 -5 4 6 -2 1"))), "(1,0,-1,-1,1,1)");
  EXPECT_EQ(vector_str(incidence_vector(loop.rib, w(loop, "1 1"))), "(0)");
  EXPECT_EQ(vector_str(incidence_vector(loop.rib, w(loop, "1"))), "(1)");
  EXPECT_TRUE(is_zero(incidence_vector(loop.rib, trivial_walk(0))));
}

TEST_F(Walks, Classification) {
  EXPECT_EQ(classify_walk(six.rib, w(six, "3 -6 -4 5 3")), WalkClass::Belt);
  EXPECT_EQ(classify_walk(loop.rib, w(loop, "1 1")), WalkClass::ClosedEven);
  EXPECT_EQ(classify_walk(loop.rib, w(loop, "1 1 1")), WalkClass::ClosedOdd);
  EXPECT_EQ(classify_walk(six.rib, w(six, "2 -3 -5 4 6 -2 1")), WalkClass::Open);
  EXPECT_EQ(classify_walk(loop.rib, w(loop, "1 -1")), WalkClass::NotReduced);
}

TEST_F(Walks, AntiWalks) {
  auto ot = [&](Instance& in, const std::string& v) { return f(in, in.aw.ot[in.rib.vertex_index(v)]); };
  EXPECT_EQ(ot(loop, "a1"), "-1");
  EXPECT_EQ(f(loop, inverse(loop.rib, loop.aw.ot[0])), "1");
  EXPECT_EQ(ot(a1, "a1"), "2 -1 3");
  EXPECT_EQ(ot(a1, "b1"), "-2 1 -4");
  EXPECT_EQ(ot(a1, "c1"), "5");
  EXPECT_EQ(ot(a1, "triv:4"), "4 -5 -3");
  EXPECT_EQ(ot(two, "a1"), "-3");
  EXPECT_EQ(ot(two, "b1"), "1");
}

TEST_F(Walks, Faces) {
  auto fs = faces(two.rib);
  ASSERT_EQ(fs.size(), 3u);
  std::set<std::pair<std::string, bool>> got;
  for (const auto& x : fs) got.insert({f(two, x.walk), x.full});
  EXPECT_EQ(got, (std::set<std::pair<std::string, bool>>{{"1 -3", false}, {"-1 2", true}, {"-2 3", true}}));

  auto fa = faces(a1.rib);
  ASSERT_EQ(fa.size(), 1u);
  EXPECT_EQ(fa[0].length, 10);
  EXPECT_EQ(fa[0].closed_degree, 2);

  auto fl = faces(loop.rib);
  ASSERT_EQ(fl.size(), 2u);
  bool full_one = false;
  for (const auto& x : fl) full_one = full_one || (x.full && f(loop, x.walk) == "1");
  EXPECT_TRUE(full_one);
}

TEST_F(Walks, ReducedConcat) {
  Walk x = w(a1, "-1 3 5");
  EXPECT_TRUE(reduced_concat(a1.rib, x, inverse(a1.rib, x)).trivial());
  EXPECT_EQ(f(a1, reduced_concat(a1.rib, inverse(a1.rib, w(a1, "-2 1 -4")), x)), "4 -1 2 -1 3 5");
}

TEST_F(Walks, PlusOperations) {
  PlusOps p = plus_ops(a1.rib, a1.aw, w(a1, "-1 3 5"));
  EXPECT_EQ(f(a1, p.left), "4 -1 2 -1 3 5");
  EXPECT_EQ(f(a1, p.right), "-1 3 5 -2 1 -4");
  EXPECT_EQ(f(a1, p.both), "4 -1 2 -1 3 5 -2 1 -4");
  EXPECT_EQ(p.m_shift, 1);

  PlusOps q = plus_ops(loop.rib, loop.aw, w(loop, "1"));
  EXPECT_EQ(f(loop, q.left), "1 1");
  EXPECT_TRUE(q.right.trivial());
  EXPECT_EQ(q.m_shift, -1);

  PlusOps r = plus_ops(loop.rib, loop.aw, w(loop, "1 1 1"));
  EXPECT_EQ(f(loop, r.left), "1 1 1 1");
  EXPECT_EQ(f(loop, r.right), "1 1");
  EXPECT_EQ(f(loop, r.both), "1 1 1");
  EXPECT_EQ(r.m_shift, -1);

  try {
    plus_ops(loop.rib, loop.aw, trivial_walk(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "TrivialInput");
  }
}

TEST_F(Walks, Resolvable) {
  auto r = resolvable_classify(two.rib, w(two, "-1 2 -3"));
  EXPECT_EQ(r.kind, Resolvable::TwoSided);
  EXPECT_TRUE(r.primitive);
  auto l = resolvable_classify(loop.rib, w(loop, "1 1"));
  EXPECT_EQ(l.kind, Resolvable::Left);
  EXPECT_TRUE(l.primitive);
  EXPECT_FALSE(resolvable_classify(loop.rib, w(loop, "1 1 1")).primitive);
  EXPECT_EQ(resolvable_classify(a1.rib, w(a1, "-1 3 5")).kind, Resolvable::None);
}

TEST(WalkProperties, ParityFacesAndIncidence) {
  std::mt19937_64 rng(21);
  auto insts = fixtures::random_instances(8, 80);
  for (auto& in : fixtures::named_instances()) insts.push_back(std::move(in));
  for (const auto& in : insts) {
    const RibbonGraph& r = in.rib;
    IntMatrix incT = incidence_matrix(r).transpose();
    for (const auto& x : reduced_walks(r, 6)) {
      int d = degree(r, x);
      EXPECT_NE((d + static_cast<int>(x.length())) % 2, 0) << format_walk(r, x);
      EXPECT_EQ(degree(r, inverse(r, x)), -d);
      // Inc^T inc(w) = e_t - (-1)^l e_s
      IntVector want(r.num_vertices(), 0);
      want[walk_target(r, x)] += 1;
      want[walk_source(r, x)] += (x.length() % 2 ? 1 : -1);
      EXPECT_EQ(incT * incidence_vector(r, x), want);
      EXPECT_EQ(incidence_vector(r, inverse(r, x)), scaled(incidence_vector(r, x), x.length() % 2 ? 1 : -1));
      if (is_closed(r, x)) {
        for (std::size_t k : {2u, 3u}) {
          Walk p = power(r, x, k);
          IntVector want_p = x.length() % 2 == 0 ? scaled(incidence_vector(r, x), k) : scaled(incidence_vector(r, x), k % 2);
          EXPECT_EQ(incidence_vector(r, p), want_p);
        }
      }
    }
    // concatenation rule on random pairs
    for (int k = 0; k < 20; ++k) {
      Walk a = random_reduced_walk(rng, r, 5), b = random_reduced_walk(rng, r, 5);
      if (walk_source(r, a) != walk_target(r, b)) continue;
      Walk ab = concat(r, a, b);
      EXPECT_EQ(incidence_vector(r, ab),
                incidence_vector(r, a) + scaled(incidence_vector(r, b), a.length() % 2 ? -1 : 1));
    }
    int total = 0;
    for (const auto& fc : faces(r)) {
      total += fc.length;
      if (fc.full) EXPECT_EQ(fc.length, fc.closed_degree);
      else EXPECT_EQ((fc.length - fc.closed_degree) / 2, static_cast<int>(fc.factors.size()));
    }
    EXPECT_EQ(total, 2 * static_cast<int>(r.num_edges()));
  }
}

TEST(WalkProperties, ReducedConcatIsAssociative) {
  std::mt19937_64 rng(22);
  for (const auto& in : fixtures::random_instances(9, 60)) {
    const RibbonGraph& r = in.rib;
    for (int k = 0; k < 60; ++k) {
      Walk a = random_reduced_walk(rng, r, 4), b = random_reduced_walk(rng, r, 4), c = random_reduced_walk(rng, r, 4);
      if (walk_source(r, a) != walk_target(r, b) || walk_source(r, b) != walk_target(r, c)) continue;
      Walk left = reduced_concat(r, reduced_concat(r, a, b), c);
      Walk right = reduced_concat(r, a, reduced_concat(r, b, c));
      EXPECT_EQ(left.hs, right.hs);
      EXPECT_TRUE(is_reduced(r, left));
    }
  }
}

TEST(WalkProperties, PlusWalksNeverBothTrivial) {
  std::mt19937_64 rng(23);
  for (const auto& in : fixtures::random_instances(10, 100))
    for (int k = 0; k < 10; ++k) {
      PlusOps p = plus_ops(in.rib, in.aw, random_reduced_walk(rng, in.rib, 6));
      EXPECT_FALSE(p.left.trivial() && p.right.trivial());
      EXPECT_FALSE(p.both.trivial());
    }
}
