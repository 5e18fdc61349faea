#include "nde/terminant.hpp"

#include <gtest/gtest.h>

using namespace nde;

TEST(Terminant, ExponentialIntegralCase) {
  // T_1(1) = i E_1(1)/(2 pi), mpmath
  const cplx want(0, 0.0349160375939951289);
  EXPECT_LT(std::abs(terminant_integral(1, SheetedComplex(1, 0)) - want), 1e-15);
  EXPECT_LT(std::abs(terminant_gamma(1, SheetedComplex(1, 0)) - want), 1e-15);
}

TEST(Terminant, BackendsAgree) {
  double worst = 0;
  for (double p : {1.0, 2.5, 10.0, 40.0})
    for (double m : {0.5, 5.0, 20.0, 60.0})
      for (int j = -9; j <= 9; ++j) {
        SheetedComplex w(m, 0.1 * pi * j);
        worst = std::max(worst, rel_diff(terminant_integral(p, w), terminant_gamma(p, w)));
      }
  EXPECT_LT(worst, 1e-12);
}

TEST(Terminant, MonodromyContinuity) {
  // the value is continuous across the sheet seams at -pi, pi and -3pi
  for (double p : {3.0, 7.5})
    for (double seam : {-3 * pi, -pi, pi}) {
      cplx a = terminant(p, SheetedComplex(8, seam - 1e-9)), b = terminant(p, SheetedComplex(8, seam + 1e-9));
      EXPECT_LT(std::abs(a - b), 1e-7 * std::max(1.0, std::abs(a))) << p << " " << seam;
    }
}

TEST(Terminant, MagnitudeRegimes) {
  for (double p : {10.0, 20.0}) {
    for (int j = -20; j <= 20; ++j) {
      SheetedComplex w(p, pi * j / 20.0);
      EXPECT_LE(std::abs(terminant(p, w)), 10 * std::exp(-w.value().real() - p));
    }
    double mx = 0;
    for (int j = 0; j < 40; ++j) mx = std::max(mx, std::abs(terminant(p, SheetedComplex(p, -pi - 2 * pi * j / 40.0))));
    EXPECT_GT(mx, 0.1);
    EXPECT_LT(mx, 10);
  }
}

TEST(Terminant, SingulantRootSolvesItsEquation) {
  for (int j = 1; j < 100; ++j) {
    double phi = -pi + 4 * pi * j / 100.0;
    cplx c = c_of_phi(phi);
    double s = phi - pi;
    EXPECT_LT(std::abs(0.5 * c * c - (1.0 + cplx(0, s) - std::exp(cplx(0, s)))), 1e-13) << phi;
  }
  EXPECT_LT(std::abs(c_of_phi(pi)), 1e-15);
  const double h = 1e-5;
  EXPECT_NEAR(((c_of_phi(pi + h) - c_of_phi(pi - h)) / (2 * h)).real(), 1.0, 1e-8);
  EXPECT_THROW(c_of_phi(3 * pi), SectorViolation);
}

TEST(Terminant, ComplexErf) {
  // mpmath values
  EXPECT_LT(rel_diff(erf_c({1, 2}), {-0.536643565778565034, -5.04914370344703467}), 1e-14);
  EXPECT_LT(rel_diff(erf_c({3, -0.5}), {1.00002806536147640, 2.62848972225882314e-7}), 1e-14);
  EXPECT_NEAR(erf_c(0.5).real(), std::erf(0.5), 1e-16);
  EXPECT_NEAR(erf_c(-4.0).real(), std::erf(-4.0), 1e-16);
}

TEST(Terminant, SmoothingApproximation) {
  const double p = 60;
  for (int j = 0; j <= 20; ++j) {
    SheetedComplex w(60, -1.2 * pi + 0.4 * pi * j / 20);
    EXPECT_LT(std::abs(smoothing_approx(p, w) - terminant(p, w)), 3 / std::sqrt(w.r)) << w.theta;
  }
  EXPECT_THROW(smoothing_approx(p, SheetedComplex(60, pi)), SectorViolation);
}

TEST(Terminant, RejectsBadOrder) {
  EXPECT_THROW(terminant(0.0, SheetedComplex(1, 0)), std::domain_error);
  EXPECT_THROW(terminant_integral(2, SheetedComplex(1, pi)), SectorViolation);
}
