#include <gtest/gtest.h>

#include <sstream>

#include "pq/errors.hpp"
#include "pq/rational.hpp"

using pq::BigInt;
using pq::Rational;

TEST(Rational, ParseAndPrintCanonical) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-3/7").str(), "-3/7");
  EXPECT_EQ(Rational::parse("3/-7").str(), "-3/7");
  EXPECT_EQ(Rational::parse("5").str(), "5/1");
  EXPECT_EQ(Rational(0).str(), "0/1");
  std::ostringstream os;
  os << Rational(1, 3);
  EXPECT_EQ(os.str(), "1/3");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1/0", "x", "1.5", "1/2/3", "1 /2"}) {
    EXPECT_THROW(Rational::parse(bad), pq::ParseError) << bad;
  }
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_THROW(a / Rational(0), pq::PreconditionError);
  EXPECT_THROW(Rational(1, 0), pq::PreconditionError);
}

TEST(Rational, OrderingAndRounding) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(4).ceil(), 4);
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(-2, 5).sign(), -1);
}

TEST(Rational, Binomial) {
  EXPECT_EQ(pq::binomial(5, 2), 10);
  EXPECT_EQ(pq::binomial(6, 0), 1);
  EXPECT_EQ(pq::binomial(3, 4), 0);
  EXPECT_EQ(pq::binomial(3, -1), 0);
  EXPECT_EQ(pq::binomial(60, 30), BigInt("118264581564861424"));
}
