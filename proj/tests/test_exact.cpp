#include "nde/exact.hpp"

#include <gtest/gtest.h>

using namespace nde;

TEST(ExactCoeffs, LowOrdersMatchClosedForms) {
  EXPECT_EQ(to_string(coeff_B(0)), "1");
  EXPECT_EQ(to_string(coeff_B(1)), "k");
  EXPECT_EQ(to_string(coeff_B(2)), "1/2*k^2 - 1/20");
  EXPECT_EQ(to_string(coeff_B(3)), "1/6*k^3 - 1/15*k");
  EXPECT_EQ(to_string(coeff_B(4)), "1/24*k^4 - 1/24*k^2 + 1/280");
}

TEST(ExactCoeffs, DerivativeCoefficients) {
  EXPECT_EQ(to_string(coeff_D(0)), "0");
  EXPECT_EQ(to_string(coeff_D(1)), "1");
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(coeff_D(n), coeff_D_series(n)) << "n = " << n;
}

TEST(ExactCoeffs, RoutesAgree) {
  for (int n = 0; n <= 25; ++n) {
    EXPECT_EQ(coeff_B(n), coeff_B_comtet(n)) << "n = " << n;
    EXPECT_EQ(coeff_B(n), coeff_B_lauwerier(n)) << "n = " << n;
  }
}

TEST(ExactCoeffs, ParityAndDegree) {
  // B_n(-k) = (-1)^n B_n(k), degree n
  for (int n = 0; n <= 40; ++n) {
    CoeffPolynomial p = coeff_B(n);
    EXPECT_EQ(p.degree(), n);
    for (std::size_t j = 0; j < p.c.size(); ++j)
      if ((n - static_cast<int>(j)) % 2) EXPECT_EQ(p.c[j], 0) << n << " " << j;
  }
}

TEST(ExactCoeffs, LeadingCoefficientIsInverseFactorial) {
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(coeff_B(n).c[n], 1 / factorial_q(n));
}

TEST(ExactCoeffs, ExactEvaluation) {
  // B_2(3) = 9/2 - 1/20, B_2(1+i) = i - 1/20
  EXPECT_EQ(eval_exact(coeff_B(2), Rational(3)), Rational(89, 20));
  GaussRational v = eval_exact(coeff_B(2), GaussRational(1, 1));
  EXPECT_EQ(v.re, Rational(-1, 20));
  EXPECT_EQ(v.im, Rational(1));
}

TEST(ExactCoeffs, ParseRational) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("1.5e2"), Rational(150));
  EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(ExactCoeffs, ParseGaussRational) {
  EXPECT_EQ(parse_gauss_rational("2+2i"), GaussRational(2, 2));
  EXPECT_EQ(parse_gauss_rational("4-3i"), GaussRational(4, -3));
  EXPECT_EQ(parse_gauss_rational("i"), GaussRational(0, 1));
  EXPECT_EQ(parse_gauss_rational("1/2i"), GaussRational(0, Rational(1, 2)));
  EXPECT_EQ(parse_gauss_rational("0.3"), GaussRational(Rational(3, 10)));
}
