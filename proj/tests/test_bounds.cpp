#include "nde/acceptance.hpp"

#include <gtest/gtest.h>

using namespace nde;

TEST(ErrorBounds, SweepHoldsEverywhere) {
  acceptance::SweepStats s = acceptance::bound_sweep();
  EXPECT_GT(s.cases, 1000);
  EXPECT_GT(s.near_stokes, 0);
  EXPECT_EQ(s.failures, 0);
  EXPECT_GE(s.min_ratio, 1.0);
}

TEST(ErrorBounds, CentralSectorOnRealAxis) {
  SheetedComplex nu(20, 0);
  for (int N = 1; N <= 6; ++N) {
    double R = std::abs(function_value(FunctionKind::J, 20.0, nu) - partial_sum_equal_order(FunctionKind::J, nu, N));
    double b = bound({FunctionKind::J, N, SectorClass::Central, 0}, nu);
    EXPECT_GE(b, R) << N;
    EXPECT_LT(b, 50 * R) << N;  // not absurdly loose
  }
}

TEST(ErrorBounds, RejectsOutOfSector) {
  SheetedComplex nu(20, 2.5 * pi);
  EXPECT_THROW(bound({FunctionKind::J, 3, SectorClass::Central, nu.theta}, nu), SectorViolation);
}

TEST(ErrorBounds, WatsonInequalities) {
  // J'_10(10) from mpmath
  WatsonReport w = watson_inequalities(10);
  EXPECT_NEAR(w.jp, 0.0843695786317611882, 1e-12);
  EXPECT_NEAR(w.jp_leading, 0.0885149910037806209, 1e-15);
  EXPECT_TRUE(w.jp_below);
  EXPECT_TRUE(w.yp_above);
  EXPECT_TRUE(w.r1_jp_negative);
  for (double nu : {5.0, 50.0}) EXPECT_TRUE(watson_inequalities(nu).all_ok()) << nu;
}

TEST(ErrorBounds, MeijerAngles) {
  for (int N : {1, 4, 7}) {
    double phi = meijer_angle_sin(MeijerSin::Eq26, 1.5 * pi, N);
    EXPECT_NEAR(phi, std::atan(1 / std::sqrt((2 * N + 3) / 3.0)), 1e-11) << N;
  }
  const double th = 1.9 * pi, p = meijer_sin_power(MeijerSin::Eq26, 4), c = (p - 1) / (p + 1);
  EXPECT_LE(std::abs(std::sin(th - 2 * meijer_angle_sin(MeijerSin::Eq26, th, 4)) - c * std::sin(th)), 1e-12);
  EXPECT_LT(meijer_angle_sin(MeijerSin::Eq26, pi + 1e-9, 3), 1e-8);
  for (double t : {0.3 * pi, 0.6 * pi, 0.9 * pi})
    for (MeijerCos v : {MeijerCos::J1, MeijerCos::J2, MeijerCos::J3})
      EXPECT_NEAR(meijer_angle_cos(v, -t, 5), -meijer_angle_cos(v, t, 5), 1e-11) << t;
  EXPECT_THROW(meijer_angle_cos(MeijerCos::J1, 0.1, 5), NoBracket);
}
