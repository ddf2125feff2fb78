#include "cosprod/rational.hpp"

#include <random>

#include <gtest/gtest.h>

#include "cosprod/errors.hpp"

namespace cosprod {
namespace {

TEST(RationalTest, ArithExamples) {
  EXPECT_EQ(rational_arith(Rational(1, 2), Rational(1, 2), ArithKind::kMul), Rational(1, 4));
  // B = (2/3) A^2 with A = 1/2
  EXPECT_EQ(rational_arith(Rational(2, 3), Rational(1, 4), ArithKind::kMul), Rational(1, 6));
  const Rational zero = rational_arith(Rational(1, 3), Rational(-1, 3), ArithKind::kAdd);
  EXPECT_EQ(zero.to_string(), "0/1");
  EXPECT_EQ(rational_arith(Rational(1, 2), Rational(1, 3), ArithKind::kSub), Rational(1, 6));
  EXPECT_EQ(rational_arith(Rational(1, 2), Rational(1, 3), ArithKind::kDiv), Rational(3, 2));
}

TEST(RationalTest, DivisionByZeroIsReported) {
  EXPECT_THROW(rational_arith(Rational(1), Rational(0), ArithKind::kDiv), DivisionByZero);
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational(0).reciprocal(), DivisionByZero);
  try {
    rational_arith(Rational(5), Rational(0), ArithKind::kDiv);
  } catch (const DivisionByZero& e) {
    EXPECT_STREQ(e.what(), "division by zero");
  }
}

TEST(RationalTest, LowestTermsPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(7).to_string(), "7/1");
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+1000000"), Rational(1000000));
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1e3"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("2/0"), DivisionByZero);
}

TEST(RationalTest, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
}

TEST(RationalTest, DivideThenMultiplyRoundTrips) {
  std::mt19937_64 rng(20041208);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    if (b.is_zero()) b = Rational(1, 7);
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ((a - b) + b, a);
  }
}

}  // namespace
}  // namespace cosprod
