#include "nde/late.hpp"

#include <gtest/gtest.h>

using namespace nde;

TEST(LateCoeffs, TableFirstRow) {
  Table1Row r = late_row(100, GaussRational(3), 50);
  EXPECT_GE(agreeing_digits(r.exact, Real50("0.7745012865285354362490235e-17")), 22);
  EXPECT_GE(agreeing_digits(r.approx, Real50("0.7745012865519805241476135e-17")), 22);
  EXPECT_GE(agreeing_digits(r.error(), Real50("-0.234450878985899e-27")), 6);
}

TEST(LateCoeffs, BetaConstant) { EXPECT_NEAR(static_cast<double>(dingle_beta()), 0.1530827453, 5e-11); }

TEST(LateCoeffs, GammaRatioAsymptotics) {
  for (int m = 0; m <= 6; ++m) {
    double q = static_cast<double>(gamma_ratio_third(300, m) / pow(Real50(3) / 300, Real50(m + 1) / 3));
    EXPECT_NEAR(q, 1.0, 0.03) << "m = " << m;
  }
}

TEST(LateCoeffs, ErrorTermOrder) {
  const GaussRational k(Rational(3, 10));
  std::vector<double> a;
  for (int n : {60, 120, 240}) {
    Complex50 ex = eval_float50(coeff_B(n), Complex50(Real50(3) / 10));
    Real50 e = abs(ex - inverse_factorial_approx(n, k, 10).value);
    // scale of the neglected terms, including the (12 pi)^{-n/3} prefactor
    Real50 scale = gamma_ratio_third(n, 10) * pow(12 * boost::math::constants::pi<Real50>(), Real50(-n) / 3);
    a.push_back(static_cast<double>(e / scale));
  }
  for (double x : a) {
    EXPECT_GT(x, 0);
    EXPECT_LT(x, 10 * a.front());
  }
}

TEST(LateCoeffs, WatsonApproximation) {
  Real50 ex = to_real<Real50>(eval_exact(coeff_B(200), Rational(0)));
  EXPECT_NEAR(static_cast<double>(watson_late(100) / ex), 1.0, 0.02);
}

TEST(LateCoeffs, TwoTermFormulaReducesToWatson) {
  // reduces to the Watson value at k = 0 and vanishes at odd n
  EXPECT_LT(static_cast<double>(abs(two_term_late(200, GaussRational(0)) - Complex50(watson_late(100))) / watson_late(100)),
            1e-30);
  EXPECT_LT(static_cast<double>(abs(two_term_late(101, GaussRational(0)))), 1e-90);
}

TEST(LateCoeffs, TwoTermFormulaAtKappaThree) {
  Complex50 ex = eval_float50(coeff_B(100), Complex50(3));
  EXPECT_LT(static_cast<double>(abs(two_term_late(100, GaussRational(3)) - ex) / abs(ex)), 0.01);
}

TEST(LateCoeffs, DingleRatio) { EXPECT_NEAR(static_cast<double>(dingle_check(60).ratio()), 1.0, 0.05); }

TEST(LateCoeffs, OptimalTruncationIndex) {
  OptimalM o = optimal_truncation_scan(100, GaussRational(3), 10, 90);
  EXPECT_GE(o.M, 40);
  EXPECT_LE(o.M, 60);
  OptimalM o2 = optimal_truncation_scan(100, GaussRational(2, 2), 10, 90);
  EXPECT_GE(o2.M, 40);
  EXPECT_LE(o2.M, 60);
}

TEST(LateCoeffs, Preconditions) {
  EXPECT_THROW(inverse_factorial_approx(100, GaussRational(3), 5), std::domain_error);
  EXPECT_THROW(inverse_factorial_approx(10, GaussRational(0), 10), std::invalid_argument);
  EXPECT_THROW(two_term_late(1, GaussRational(0)), std::invalid_argument);
}
