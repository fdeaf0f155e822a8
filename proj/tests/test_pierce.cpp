#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "pq/errors.hpp"
#include "pq/pierce.hpp"

using namespace pqtest;
using pq::Budget;
using pq::WeightedPoint;
using pq::WeightedPoints;

namespace {

// Oracle: smallest k such that some k candidate points hit every body.
std::size_t brute_piercing(const Family& f) {
  const auto cands = pq::candidate_points(f.bodies());
  for (std::size_t k = 1; k <= f.size(); ++k) {
    bool found = false;
    for_each_subset(cands.size(), k, [&](const std::vector<std::size_t>& idx) {
      if (found) return;
      found = std::all_of(f.bodies().begin(), f.bodies().end(), [&](const ConvexBody& b) {
        return std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return b.contains(cands[i]); });
      });
    });
    if (found) return k;
  }
  return f.size();
}

WeightedPoints unit_points(const std::vector<Point2>& pts) {
  std::vector<WeightedPoint> w;
  for (const auto& p : pts) w.push_back({p, Rational(1)});
  return WeightedPoints(std::move(w));
}

}  // namespace

TEST(Pierce, ExactExamples) {
  Budget b;
  EXPECT_EQ(pq::exact_min_piercing(Family({box(0, 0, 1, 1)}), b).size(), 1u);
  EXPECT_EQ(pq::exact_min_piercing(disjoint_boxes(5), b).size(), 5u);
  EXPECT_EQ(pq::exact_min_piercing(crossing_segments(6, 2), b).size(), 3u);
  EXPECT_EQ(pq::exact_min_piercing(triangle_sides(), b).size(), 2u);
}

TEST(Pierce, ExactMatchesBruteForceAndCertifies) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto f = random_family(6, seed, 10, 3);
    Budget b;
    const auto set = pq::exact_min_piercing(f, b);
    EXPECT_EQ(set.size(), brute_piercing(f)) << "seed " << seed;
    EXPECT_TRUE(pq::is_valid_piercing(f, set));
    EXPECT_EQ(set.certificate.size(), f.size());
    EXPECT_LE(set.size(), pq::greedy_piercing(f).size());
  }
}

TEST(Pierce, GreedyExamples) {
  EXPECT_EQ(pq::greedy_piercing(concentric(5)).size(), 1u);
  EXPECT_EQ(pq::greedy_piercing(disjoint_boxes(4)).size(), 4u);
  EXPECT_EQ(pq::greedy_piercing(crossing_segments(6, 4)).size(), 3u);
}

TEST(Pierce, CertifyRejectsMissedBody) {
  const auto f = disjoint_boxes(2);
  EXPECT_THROW(pq::certify_piercing(f, {P(0, 0)}), pq::VerificationFailure);
  const auto ok = pq::certify_piercing(f, {P(0, 0), P(3, 0)});
  EXPECT_EQ(ok.certificate.at(1), 1u);
}

TEST(Pierce, LpExamples) {
  const auto shared = pq::fractional_lps(concentric(4));
  EXPECT_EQ(shared.primal_value, Rational(1));
  EXPECT_EQ(shared.alpha, Rational(1));

  const auto apart = pq::fractional_lps(disjoint_boxes(4));
  EXPECT_EQ(apart.primal_value, Rational(4));
  EXPECT_EQ(apart.alpha, Rational(1, 4));

  const auto tri = pq::fractional_lps(triangle_sides());
  EXPECT_EQ(tri.primal_value, Rational(3, 2));
  EXPECT_EQ(tri.dual_value, Rational(3, 2));
  EXPECT_EQ(tri.alpha, Rational(2, 3));
  EXPECT_EQ(tri.point_weights.size(), 3u);
  for (const auto& e : tri.point_weights.entries()) EXPECT_EQ(e.weight, Rational(1, 3));
}

TEST(Pierce, LpBetweenMatchingAndPiercing) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto f = random_family(7, seed, 10, 4, seed % 3 == 0 ? 2 : 4);
    const auto lp = pq::fractional_lps(f);
    EXPECT_EQ(lp.primal_value, lp.dual_value);
    EXPECT_EQ(lp.point_weights.total(), Rational(1));
    for (const auto& b : f.bodies()) EXPECT_GE(pq::covered_weight(b, lp.point_weights), lp.alpha);
    Budget bud;
    EXPECT_LE(lp.primal_value, Rational(static_cast<long>(pq::exact_min_piercing(f, bud).size())));
    // Integral matching: pairwise-disjoint bodies need distinct points.
    Budget b2;
    const auto g = pq::intersection_graph(f);
    std::size_t independent = 0;
    for (std::size_t k = f.size(); k >= 1 && !independent; --k) {
      for_each_subset(f.size(), k, [&](const std::vector<std::size_t>& s) {
        if (independent) return;
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
          for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = !g.adjacent[s[i]][s[j]];
        if (ok) independent = k;
      });
    }
    EXPECT_GE(lp.dual_value, Rational(static_cast<long>(independent)));
  }
}

TEST(Pierce, DeepestCandidate) {
  const auto d = pq::deepest_candidate(concentric(4));
  EXPECT_EQ(d.depth, 4u);
  EXPECT_EQ(d.members, (pq::IdSet{0, 1, 2, 3}));
  const auto c = pq::deepest_candidate(crossing_segments(5, 2));
  EXPECT_EQ(c.depth, 2u);
}

TEST(Pierce, WeightedPointsMergeAndValidate) {
  const WeightedPoints w({{P(1, 1), Rational(1)}, {P(0, 0), Rational(2)}, {P(1, 1), Rational(3)}});
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(w.total(), Rational(6));
  EXPECT_EQ(w.entries()[1].weight, Rational(4));
  EXPECT_THROW(WeightedPoints({{P(0, 0), Rational(0)}}), pq::PreconditionError);
}

TEST(Pierce, VerifierExamples) {
  std::vector<Point2> grid;
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y) grid.push_back(P(x, y));
  const auto pts = unit_points(grid);
  Budget b;
  EXPECT_FALSE(pq::verify_weak_net(pts, Rational(1, 3), grid, b));
  EXPECT_TRUE(pq::verify_weak_net(pts, Rational(1, 3), {}, b));

  // Odd collinear support, median net, eps = 1/2.
  for (long n = 3; n <= 9; n += 2) {
    std::vector<Point2> line;
    for (long i = 0; i < n; ++i) line.push_back(P(i, 0));
    EXPECT_FALSE(pq::verify_weak_net(unit_points(line), Rational(1, 2), {P(n / 2, 0)}, b)) << n;
    // Even support: a half-weight run avoids either middle point.
    line.push_back(P(n, 0));
    EXPECT_TRUE(pq::verify_weak_net(unit_points(line), Rational(1, 2), {P(n / 2, 0)}, b)) << n;
  }
}

TEST(Pierce, WeakNetConstruction) {
  std::vector<Point2> grid;
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y) grid.push_back(P(x, y));
  const auto pts = unit_points(grid);
  Budget b;
  const auto net = pq::weak_epsilon_net(pts, Rational(1, 3), b);
  Budget check;
  EXPECT_FALSE(pq::verify_weak_net(pts, Rational(1, 3), net.points, check));

  const auto whole = pq::weak_epsilon_net(pts, Rational(1), b);
  EXPECT_EQ(whole.points.size(), 1u);
  EXPECT_TRUE(ConvexBody(grid).contains(whole.points.front()));
  EXPECT_THROW(pq::weak_epsilon_net(pts, Rational(0), b), pq::PreconditionError);
  EXPECT_THROW(pq::weak_epsilon_net(pts, Rational(3, 2), b), pq::PreconditionError);
}

TEST(Pierce, RepairCapIsABudgetError) {
  pq::GenSpec s;
  s.kind = pq::GenKind::kGridPoints;
  s.n = 12;
  s.grid = 6;
  s.seed = 4;
  const auto pts = std::get<WeightedPoints>(pq::gen(s));
  Budget tight(pq::BudgetLimits{.repair_cap = 0});
  // A 1/4-net needs repairs beyond the quantile grid or is accepted outright;
  // in the first case the cap must raise, never return an unverified net.
  try {
    const auto net = pq::weak_epsilon_net(pts, Rational(1, 4), tight);
    Budget check;
    EXPECT_FALSE(pq::verify_weak_net(pts, Rational(1, 4), net.points, check));
    EXPECT_EQ(net.repairs, 0u);
  } catch (const pq::BudgetExceeded&) {
    SUCCEED();
  }
}

TEST(Pierce, PipelineExamples) {
  Budget b;
  const auto nested = pq::ak_pipeline(concentric(4), {4, 4, 2}, b);
  EXPECT_EQ(nested.deepest.depth, 4u);
  EXPECT_EQ(nested.transversal.size(), 1u);

  pq::GenSpec s;
  s.kind = pq::GenKind::kSegmentsPlusBoxes;
  s.p = 4;
  s.q = 3;
  s.seed = 1;
  const auto spb = pq::gen_family(s);
  const auto rep = pq::ak_pipeline(spb, {4, 3, 2}, b);
  EXPECT_TRUE(pq::is_valid_piercing(spb, rep.transversal));
  Budget b2;
  EXPECT_GE(rep.transversal.size(), pq::exact_min_piercing(spb, b2).size());
  EXPECT_EQ(rep.lp.primal_value, rep.lp.dual_value);

  EXPECT_THROW(pq::ak_pipeline(disjoint_boxes(4), {4, 3, 2}, b), pq::PreconditionError);
  EXPECT_THROW(pq::ak_pipeline(spb, {4, 2, 2}, b), pq::PreconditionError);
}

TEST(Pierce, PipelineOnRandomSevenFive) {
  int runs = 0;
  for (std::uint64_t seed = 1; seed <= 200 && runs < 5; ++seed) {
    const auto f = random_family(7, seed, 3, 5);
    Budget b;
    if (!pq::has_pq_property(f, 7, 5, b).holds) continue;
    ++runs;
    const auto rep = pq::ak_pipeline(f, {7, 5, 2}, b);
    EXPECT_TRUE(pq::is_valid_piercing(f, rep.transversal));
    Budget b2;
    EXPECT_LE(pq::exact_min_piercing(f, b2).size(), 3u);  // p - q + 1
  }
  EXPECT_GT(runs, 0);
}

TEST(Pierce, BudgetIsEnforced) {
  const auto f = random_family(10, 3, 4, 4);
  Budget tiny(pq::BudgetLimits{.max_subsets = 5});
  EXPECT_THROW(pq::tuple_stats(f, 10, tiny), pq::BudgetExceeded);
}
