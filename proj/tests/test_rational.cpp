#include <gtest/gtest.h>

#include "error_code.hpp"
#include "scg/error.hpp"
#include "scg/random.hpp"
#include "scg/rational.hpp"

using scg::Error;
using scg::ErrorCode;
using scg::Rational;
using scg::testing::code_of;

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(8, 4).to_string(), "2");
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(r.sign(), -1);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-7", "1/3", "-22/7", "123456789012345678901234567891/2"}) {
    EXPECT_EQ(Rational::parse(s).to_string(), s);
  }
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* s : {"", "1/", "/2", "a", "1.5", "1/0", " 1"}) {
    const ErrorCode code = code_of([&] { (void)Rational::parse(s); });
    EXPECT_TRUE(code == ErrorCode::ParseError || code == ErrorCode::DivisionByZero) << s;
  }
}

TEST(Rational, DivisionByZero) {
  EXPECT_EQ(code_of([] { (void)Rational(1, 0); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { (void)(Rational(1) / Rational(0)); }), ErrorCode::DivisionByZero);
}

TEST(Rational, FieldLawsOnSamples) {
  scg::RationalSampler rng(11);
  for (int k = 0; k < 500; ++k) {
    const Rational a = rng.signed_rational(50, 13);
    const Rational b = rng.signed_rational(50, 13);
    const Rational c = rng.signed_rational(50, 13);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(-(-a), a);
    EXPECT_GE(abs(a).sign(), 0);
  }
}

TEST(Rational, OrderingMatchesCrossMultiplication) {
  scg::RationalSampler rng(12);
  for (int k = 0; k < 300; ++k) {
    const Rational a = rng.signed_rational();
    const Rational b = rng.signed_rational();
    const mpz_class lhs = a.numerator() * b.denominator();
    const mpz_class rhs = b.numerator() * a.denominator();
    EXPECT_EQ(a < b, lhs < rhs);
    EXPECT_EQ(a == b, lhs == rhs);
  }
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(scg::factorial(0), Rational(1));
  EXPECT_EQ(scg::factorial(10), Rational(3628800));
  EXPECT_EQ(scg::binomial(5, 2), Rational(10));
  EXPECT_EQ(scg::binomial(3, 5), Rational(0));
  // Pascal's rule.
  for (std::size_t n = 1; n < 20; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      EXPECT_EQ(scg::binomial(n, k), scg::binomial(n - 1, k - 1) + scg::binomial(n - 1, k));
}

TEST(Rational, SamplerIsDeterministic) {
  scg::RationalSampler a(5);
  scg::RationalSampler b(5);
  for (int k = 0; k < 50; ++k) EXPECT_EQ(a.signed_rational(), b.signed_rational());
  scg::RationalSampler c(6);
  for (int k = 0; k < 200; ++k) {
    const auto x = c.integer(-3, 4);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 4);
    EXPECT_GE(c.nonnegative_rational().sign(), 0);
  }
}

TEST(Rational, EigenMatrixArithmetic) {
  scg::RationalMatrix m(2, 2);
  m << Rational(1, 2), Rational(1, 3), Rational(2), Rational(-1);
  scg::RationalVector x(2);
  x << Rational(6), Rational(3);
  const scg::RationalVector y = m * x;
  EXPECT_EQ(y(0), Rational(4));
  EXPECT_EQ(y(1), Rational(9));
}
