#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pq/bounds.hpp"
#include "pq/errors.hpp"

using pq::Rational;

TEST(Bounds, DecaenExamples) {
  EXPECT_EQ(pq::decaen_bound(4, 4, 4), Rational(1));
  EXPECT_EQ(pq::decaen_bound(5, 3, 2), Rational(15, 4));
  EXPECT_EQ(pq::decaen_bound(6, 4, 3), Rational(5));
  for (int n = 2; n <= 12; ++n)
    for (int p = 2; p <= n; ++p)
      for (int q = 2; q <= p; ++q) EXPECT_LE(pq::decaen_bound(n, p, q), Rational(pq::binomial(n, q)));
}

TEST(Bounds, KalaiExamples) {
  EXPECT_EQ(pq::kalai_bound(4, 1, 2, 3), 3);
  EXPECT_EQ(pq::kalai_bound(4, 0, 2, 2), 6);
  for (int n = 3; n <= 10; ++n)
    for (int r = 0; r <= 3; ++r)
      for (int k = 2 + r + 1; k <= n; ++k) EXPECT_EQ(pq::kalai_bound(n, r, 2, k), 0);
}

TEST(Bounds, PiercingFraction) {
  const Rational a = pq::piercing_fraction_bound({3, 3, 2});
  const double exact = 1.0 / (108.0 * std::numbers::e);
  EXPECT_LE(a.to_double(), exact);
  EXPECT_NEAR(a.to_double(), exact, exact * 1e-4);

  // q = d + 1: doubling p scales the bound by 2^-d.
  for (int p = 3; p <= 20; ++p) {
    const double r = pq::piercing_fraction_bound({2 * p, 3, 2}).to_double() /
                     pq::piercing_fraction_bound({p, 3, 2}).to_double();
    EXPECT_NEAR(r, 0.25, 1e-9);
  }
  for (int p = 3; p <= 10; ++p)
    for (int q = 3; q <= p; ++q) EXPECT_LE(pq::piercing_fraction_bound({p, q, 2}), Rational(1, 2));
  EXPECT_THROW(pq::piercing_fraction_bound({3, 2, 2}), pq::PreconditionError);
}

TEST(Bounds, Exponents) {
  EXPECT_EQ(pq::exponent_a({3, 3, 2}), Rational(4));
  EXPECT_EQ(pq::exponent_a({4, 4, 2}), Rational(3));
  EXPECT_EQ(pq::exponent_a({4, 4, 3}), Rational(9));
  EXPECT_NEAR(pq::exponent_a({1000, 1000, 3}).to_double(), 3.0, 0.01);
  EXPECT_THROW(pq::exponent_a({3, 2, 2}), pq::PreconditionError);
  EXPECT_EQ(pq::alon_kleitman_exponent(2), 6);
}

TEST(Bounds, Regimes) {
  const auto tight = pq::hd_regime({7, 5, 2});
  EXPECT_EQ(tight.regime, pq::Regime::kHdTight);
  EXPECT_EQ(tight.upper_exact, 3);
  EXPECT_EQ(tight.lower, 3);

  const auto general = pq::hd_regime({4, 3, 2});
  EXPECT_EQ(general.regime, pq::Regime::kGeneral);
  EXPECT_EQ(general.upper_exponent, Rational(4));
  EXPECT_NE(general.notes.find("3 ≤ HD_2(4,3) ≤ 13"), std::string::npos);
  EXPECT_STREQ(pq::regime_name(general.regime), "GENERAL_A");

  const auto logp = pq::hd_regime({1000, 40, 2});
  EXPECT_EQ(logp.regime, pq::Regime::kLogP);
  EXPECT_EQ(logp.upper_exponent, Rational(2));

  const auto large = pq::hd_regime({100, 45, 2}, Rational(1, 10));
  EXPECT_EQ(large.regime, pq::Regime::kLargeQ);
  EXPECT_EQ(large.upper_exact, 57);
  EXPECT_EQ(pq::hd_regime({100, 45, 2}).regime, pq::Regime::kLogP);
  EXPECT_THROW(pq::hd_regime({3, 2, 2}), pq::PreconditionError);
}

TEST(Bounds, WeakNetRelationAndRamsey) {
  EXPECT_EQ(pq::weak_net_hd_lower(1, 3, 2).p, 4);
  EXPECT_EQ(pq::weak_net_hd_lower(2, 3, 2).p, 7);
  EXPECT_THROW(pq::weak_net_hd_lower(0, 3, 2), pq::PreconditionError);
  EXPECT_EQ(pq::ramsey_bound(3, 2), 48);
  EXPECT_EQ(pq::ramsey_bound(1, 5), 625);
  EXPECT_EQ(pq::ceil_log2(1), 0);
  EXPECT_EQ(pq::ceil_log2(5), 3);
  EXPECT_EQ(pq::ceil_log2(8), 3);
}
