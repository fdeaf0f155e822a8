#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "pq/errors.hpp"
#include "pq/geometry.hpp"

using namespace pqtest;

TEST(Geometry, BoxIntersection) {
  const ConvexBody a({P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
  const ConvexBody b({{Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(1, 2)},
                      {Rational(3, 2), Rational(3, 2)}, {Rational(1, 2), Rational(3, 2)}});
  const auto c = pq::intersect(a, b);
  ASSERT_TRUE(c);
  const ConvexBody expect({{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(1, 2)},
                           {Rational(1), Rational(1)}, {Rational(1, 2), Rational(1)}});
  EXPECT_TRUE(c->same_shape(expect));
}

TEST(Geometry, DisjointTriangles) {
  const ConvexBody a({P(0, 0), P(1, 0), P(0, 1)});
  const ConvexBody b({P(5, 5), P(6, 5), P(5, 6)});
  EXPECT_FALSE(pq::intersect(a, b));
}

TEST(Geometry, CrossingSegmentsMeetAtPoint) {
  const auto c = pq::intersect(seg(0, 0, 2, 2), seg(0, 2, 2, 0));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind(), ConvexBody::Kind::kPoint);
  EXPECT_EQ(c->vertices().front(), P(1, 1));
}

TEST(Geometry, CanonicalHull) {
  const ConvexBody b({P(2, 2), P(0, 0), P(1, 1), P(2, 0), P(0, 2), P(1, 0)});
  const std::vector<Point2> expect = {P(0, 0), P(2, 0), P(2, 2), P(0, 2)};
  EXPECT_EQ(b.vertices(), expect);
  EXPECT_EQ(ConvexBody({P(3, 3), P(1, 1), P(2, 2)}).vertices(), (std::vector<Point2>{P(1, 1), P(3, 3)}));
  EXPECT_EQ(ConvexBody({P(1, 1), P(1, 1)}).kind(), ConvexBody::Kind::kPoint);
  EXPECT_THROW(ConvexBody(std::vector<Point2>{}), pq::PreconditionError);
}

TEST(Geometry, InteriorIsPlanar) {
  const auto s = seg(0, 0, 2, 0);
  EXPECT_TRUE(s.contains(P(1, 0)));
  EXPECT_FALSE(s.contains_in_interior(P(1, 0)));
  const auto b = box(0, 0, 2, 2);
  EXPECT_TRUE(b.contains_in_interior(P(1, 1)));
  EXPECT_TRUE(b.on_boundary(P(2, 1)));
  EXPECT_FALSE(b.contains(P(3, 1)));
}

TEST(Geometry, CommonPointExamples) {
  const auto nested = concentric(4);
  const auto p = pq::common_point(nested.bodies());
  ASSERT_TRUE(p);
  for (const auto& b : nested.bodies()) EXPECT_TRUE(b.contains(*p));

  const std::vector<ConvexBody> star = {seg(-1, -1, 1, 1), seg(-1, 1, 1, -1), seg(-2, 0, 2, 0)};
  EXPECT_EQ(pq::common_point(star), P(0, 0));

  // Oracle: the three pairwise clips are three distinct corners.
  const auto tri = triangle_sides();
  std::vector<Point2> corners;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto c = pq::intersect(tri[i], tri[j]);
      ASSERT_TRUE(c);
      ASSERT_EQ(c->kind(), ConvexBody::Kind::kPoint);
      corners.push_back(c->vertices().front());
    }
  }
  std::sort(corners.begin(), corners.end());
  EXPECT_EQ(std::unique(corners.begin(), corners.end()), corners.end());
  EXPECT_FALSE(pq::common_point(tri.bodies()));
  EXPECT_THROW(pq::common_point(std::span<const ConvexBody>{}), pq::PreconditionError);
}

TEST(Geometry, CandidatePointCounts) {
  const ConvexBody t({P(0, 0), P(3, 0), P(0, 3)});
  EXPECT_EQ(pq::candidate_points(std::span<const ConvexBody>(&t, 1)).size(), 3u);

  const std::vector<ConvexBody> squares = {box(0, 0, 2, 2), box(1, 1, 3, 3)};
  EXPECT_EQ(pq::candidate_points(squares).size(), 10u);

  for (int n = 2; n <= 7; ++n) {
    const auto f = crossing_segments(n, static_cast<std::uint64_t>(n));
    EXPECT_EQ(pq::candidate_points(f.bodies()).size(), static_cast<std::size_t>(2 * n + n * (n - 1) / 2));
  }
}

TEST(Geometry, IntersectMatchesPointwiseOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto f = random_family(2, seed, 4, 4, static_cast<int>(2 + seed % 4));
    const auto c = pq::intersect(f[0], f[1]);
    // Half-integer lattice covering every body.
    for (long x = -10; x <= 20; ++x) {
      for (long y = -10; y <= 20; ++y) {
        const Point2 p{Rational(x, 2), Rational(y, 2)};
        const bool both = f[0].contains(p) && f[1].contains(p);
        EXPECT_EQ(c.has_value() && c->contains(p), both) << "seed " << seed;
      }
    }
  }
}

TEST(Geometry, IntersectIsCommutativeAndIdempotent) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto f = random_family(2, seed, 5, 4, static_cast<int>(1 + seed % 5));
    const auto ab = pq::intersect(f[0], f[1]);
    const auto ba = pq::intersect(f[1], f[0]);
    ASSERT_EQ(ab.has_value(), ba.has_value());
    if (ab) EXPECT_TRUE(ab->same_shape(*ba));
    const auto aa = pq::intersect(f[0], f[0]);
    ASSERT_TRUE(aa);
    EXPECT_TRUE(aa->same_shape(f[0]));
  }
}

TEST(Geometry, CandidatesWitnessEveryNonemptySubfamily) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int n = 6 + static_cast<int>(seed % 2);
    const auto f = random_family(n, seed, 6, 4);
    const auto cands = pq::candidate_points(f.bodies());
    for (std::size_t k = 1; k <= f.size(); ++k) {
      for_each_subset(f.size(), k, [&](const std::vector<std::size_t>& idx) {
        const auto sub = pick(f, idx);
        const auto common = pq::common_point(sub);
        const bool witnessed = std::any_of(cands.begin(), cands.end(), [&](const Point2& c) {
          return std::all_of(sub.begin(), sub.end(), [&](const ConvexBody& b) { return b.contains(c); });
        });
        EXPECT_EQ(common.has_value(), witnessed);
        if (common) {
          for (const auto& b : sub) EXPECT_TRUE(b.contains(*common));
        }
      });
    }
  }
}

TEST(Geometry, SegmentIntersectionCases) {
  EXPECT_EQ(pq::segment_intersection(P(0, 0), P(2, 0), P(1, 0), P(3, 0)).size(), 2u);
  EXPECT_EQ(pq::segment_intersection(P(0, 0), P(2, 0), P(2, 0), P(3, 0)).size(), 1u);
  EXPECT_TRUE(pq::segment_intersection(P(0, 0), P(2, 0), P(0, 1), P(2, 1)).empty());
  EXPECT_EQ(pq::segment_intersection(P(1, 1), P(1, 1), P(0, 0), P(2, 2)).size(), 1u);
}
