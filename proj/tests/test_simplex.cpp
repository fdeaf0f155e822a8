#include <gtest/gtest.h>

#include <optional>

#include "pq/instances.hpp"
#include "pq/simplex.hpp"

using pq::LinearProgram;
using pq::LpStatus;
using pq::Rational;
using pq::Sense;

TEST(Simplex, SmallCover) {
  // min x + y  s.t.  x + 2y >= 2, 2x + y >= 2  ->  x = y = 2/3.
  LinearProgram lp;
  lp.objective = {1, 1};
  lp.add_row({1, 2}, Sense::kGreaterEqual, 2);
  lp.add_row({2, 1}, Sense::kGreaterEqual, 2);
  const auto s = pq::solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(4, 3));
  EXPECT_EQ(s.x, (std::vector<Rational>{Rational(2, 3), Rational(2, 3)}));
}

TEST(Simplex, EqualityAndMaximization) {
  // max 3x + 2y (min -3x - 2y)  s.t.  x + y = 4, x <= 3.
  LinearProgram lp;
  lp.objective = {-3, -2};
  lp.add_row({1, 1}, Sense::kEqual, 4);
  lp.add_row({1, 0}, Sense::kLessEqual, 3);
  const auto s = pq::solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(-11));
}

TEST(Simplex, InfeasibleAndUnbounded) {
  LinearProgram inf;
  inf.objective = {1};
  inf.add_row({1}, Sense::kLessEqual, 1);
  inf.add_row({1}, Sense::kGreaterEqual, 2);
  EXPECT_EQ(pq::solve_lp(inf).status, LpStatus::kInfeasible);

  LinearProgram unb;
  unb.objective = {-1, 0};
  unb.add_row({1, -1}, Sense::kLessEqual, 1);
  EXPECT_EQ(pq::solve_lp(unb).status, LpStatus::kUnbounded);
}

TEST(Simplex, RedundantAndNegativeRhs) {
  LinearProgram lp;
  lp.objective = {1, 1};
  lp.add_row({1, 1}, Sense::kEqual, 2);
  lp.add_row({2, 2}, Sense::kEqual, 4);
  lp.add_row({-1, 0}, Sense::kLessEqual, -1);  // x >= 1
  const auto s = pq::solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(2));
  EXPECT_GE(s.x[0], Rational(1));
}

TEST(Simplex, BealeCyclingExampleTerminates) {
  // Degenerate instance on which the textbook largest-coefficient rule cycles.
  LinearProgram lp;
  lp.objective = {Rational(-3, 4), 150, Rational(-1, 50), 6};
  lp.add_row({Rational(1, 4), -60, Rational(-1, 25), 9}, Sense::kLessEqual, 0);
  lp.add_row({Rational(1, 2), -90, Rational(-1, 50), 3}, Sense::kLessEqual, 0);
  lp.add_row({0, 0, 1, 0}, Sense::kLessEqual, 1);
  const auto s = pq::solve_lp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(-1, 20));
}

namespace {

// Oracle for two-variable LPs with <= rows: best feasible vertex among all
// pairwise intersections of the constraint lines and the axes.
std::optional<Rational> vertex_oracle(const LinearProgram& lp) {
  std::vector<std::array<Rational, 3>> lines;  // a x + b y = c
  for (std::size_t i = 0; i < lp.rows.size(); ++i) lines.push_back({lp.rows[i][0], lp.rows[i][1], lp.rhs[i]});
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& [a1, b1, c1] = lines[i];
      const auto& [a2, b2, c2] = lines[j];
      const Rational det = a1 * b2 - a2 * b1;
      if (det.sign() == 0) continue;
      const Rational x = (c1 * b2 - c2 * b1) / det;
      const Rational y = (a1 * c2 - a2 * c1) / det;
      if (x.sign() < 0 || y.sign() < 0) continue;
      bool ok = true;
      for (std::size_t r = 0; r < lp.rows.size() && ok; ++r) ok = lp.rows[r][0] * x + lp.rows[r][1] * y <= lp.rhs[r];
      if (!ok) continue;
      const Rational v = lp.objective[0] * x + lp.objective[1] * y;
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

}  // namespace

TEST(Simplex, MatchesVertexEnumeration) {
  pq::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    LinearProgram lp;
    // Bounded feasible region: a box row plus random rows with nonnegative rhs.
    lp.objective = {Rational(rng.uniform(-5, 5)), Rational(rng.uniform(-5, 5))};
    lp.add_row({1, 1}, Sense::kLessEqual, Rational(rng.uniform(1, 10)));
    const int m = static_cast<int>(rng.uniform(1, 4));
    for (int r = 0; r < m; ++r) {
      lp.add_row({Rational(rng.uniform(-4, 4)), Rational(rng.uniform(-4, 4))}, Sense::kLessEqual,
                 Rational(rng.uniform(0, 8)));
    }
    const auto s = pq::solve_lp(lp);
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_EQ(s.value, vertex_oracle(lp).value()) << "trial " << trial;
  }
}
