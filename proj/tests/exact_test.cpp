#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ybfuse {
namespace {

using testing::poly;
using testing::t;

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational(3, 4).to_string(), "3/4");
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Rational, Pow) {
  EXPECT_EQ(Rational(2).pow(-3), Rational(1, 8));
  EXPECT_EQ(Rational(-3, 2).pow(2), Rational(9, 4));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(Polynomial, GcdExamples) {
  const Polynomial x = Polynomial::variable();
  EXPECT_EQ(gcd(x * x - Polynomial(1), x - Polynomial(1)), x - Polynomial(1));
  const Polynomial p = poly({6, 0, 3});
  EXPECT_EQ(gcd(p, Polynomial()), p.monic());
  EXPECT_TRUE(gcd(Polynomial(), Polynomial()).is_zero());
}

TEST(Polynomial, GcdCoprimeByRemainder) {
  const Polynomial x = Polynomial::variable();
  const Polynomial a = x * x + Polynomial(1);
  const Polynomial b = x + Polynomial(2);
  // Remainder of a by the monic linear b is a(-2).
  const auto [quot, rem] = Polynomial::divmod(a, b);
  EXPECT_EQ(rem, Polynomial(a(Rational(-2))));
  EXPECT_EQ(rem, Polynomial(5));
  EXPECT_EQ(gcd(a, b), Polynomial(1));
}

TEST(Polynomial, RandomGcdDividesBoth) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial common = testing::random_poly(rng, 3);
    const Polynomial a = common * testing::random_poly(rng, 4);
    const Polynomial b = common * testing::random_poly(rng, 4);
    const Polynomial g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) continue;
    EXPECT_TRUE(g.is_zero() || g.leading().is_one());
    if (!g.is_zero()) {
      EXPECT_TRUE(Polynomial::divmod(a, g).second.is_zero());
      EXPECT_TRUE(Polynomial::divmod(b, g).second.is_zero());
      if (!common.is_zero()) {
        EXPECT_TRUE(Polynomial::divmod(g, common.monic()).second.is_zero());
      }
    }
  }
}

TEST(RationalFunction, NormalizeExamples) {
  const Polynomial x = Polynomial::variable();
  EXPECT_EQ(RationalFunction::normalize(x * x - Polynomial(1), x - Polynomial(1)),
            RationalFunction(x + Polynomial(1)));
  const RationalFunction z =
      RationalFunction::normalize(Polynomial(), x * x * x + Polynomial(7));
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.denominator().is_one());
  const RationalFunction h = RationalFunction::normalize(
      poly({2, 2}), poly({4, 4}));
  EXPECT_EQ(h, RationalFunction(Rational(1, 2)));
  EXPECT_TRUE(h.denominator().is_one());
  EXPECT_THROW(RationalFunction::normalize(x, Polynomial()), DivisionByZero);
}

TEST(RationalFunction, MonicDenominator) {
  const RationalFunction f = RationalFunction(1) / (RationalFunction(3) * t() + 6);
  EXPECT_TRUE(f.denominator().leading().is_one());
  EXPECT_EQ(f.numerator(), Polynomial(Rational(1, 3)));
}

TEST(RationalFunction, Evaluate) {
  const RationalFunction f = (t() + 1) / (t() - 1);
  EXPECT_EQ(f(Rational(3)), Rational(2));
  try {
    f(Rational(1));
    FAIL() << "expected a pole";
  } catch (const PoleAtEvaluationPoint& e) {
    EXPECT_EQ(e.point(), Rational(1));
  }
  const Polynomial x = Polynomial::variable();
  const RationalFunction g =
      RationalFunction::normalize(x * x - Polynomial(1), x - Polynomial(1));
  EXPECT_EQ(g(Rational(1)), Rational(2));
}

TEST(RationalFunction, Display) {
  const RationalFunction f = (t() - 1) / (t() + 1);
  EXPECT_EQ(f.to_string("u"), "(u - 1)/(u + 1)");
  EXPECT_EQ(RationalFunction(Rational(-3, 2)).to_string(), "-3/2");
}

TEST(RationalFunction, ComposeAndInverse) {
  const RationalFunction f = (t() - 1) / (t() + 1);
  EXPECT_EQ(f.compose(-t()), (t() + 1) / (t() - 1));
  EXPECT_EQ(f * f.inverse(), RationalFunction(1));
  EXPECT_THROW(RationalFunction().inverse(), DivisionByZero);
}

class RationalFunctionProperty : public ::testing::TestWithParam<int> {};

TEST_P(RationalFunctionProperty, RoundTripCancelsCommonFactor) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const Polynomial p = testing::random_poly(rng, 4);
  Polynomial q = testing::random_poly(rng, 4);
  Polynomial r = testing::random_poly(rng, 3);
  if (q.is_zero()) q = Polynomial(1);
  if (r.is_zero()) r = Polynomial(2);
  EXPECT_EQ(RationalFunction::normalize(p * r, q * r),
            RationalFunction::normalize(p, q));
}

TEST_P(RationalFunctionProperty, NormalizeIsIdempotent) {
  std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(GetParam()));
  const Polynomial p = testing::random_poly(rng, 5);
  Polynomial q = testing::random_poly(rng, 5);
  if (q.is_zero()) q = Polynomial(1);
  const RationalFunction f = RationalFunction::normalize(p, q);
  EXPECT_EQ(RationalFunction::normalize(f.numerator(), f.denominator()), f);
  EXPECT_TRUE(gcd(f.numerator(), f.denominator()).is_one() ||
              f.numerator().is_zero());
}

TEST_P(RationalFunctionProperty, EvaluationIsMultiplicative) {
  std::mt19937_64 rng(2000 + static_cast<std::uint64_t>(GetParam()));
  auto random_f = [&] {
    Polynomial q = testing::random_poly(rng, 3);
    if (q.is_zero()) q = Polynomial(1);
    return RationalFunction::normalize(testing::random_poly(rng, 3), q);
  };
  const RationalFunction f = random_f(), g = random_f();
  for (int k = -5; k <= 5; ++k) {
    const Rational x(k, 3);
    if (f.has_pole_at(x) || g.has_pole_at(x)) continue;
    EXPECT_EQ((f * g)(x), f(x) * g(x));
    EXPECT_EQ((f + g)(x), f(x) + g(x));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RationalFunctionProperty, ::testing::Range(0, 20));

}  // namespace
}  // namespace ybfuse
