#include "nde/hyper.hpp"

#include <gtest/gtest.h>

using namespace nde;

TEST(Hyper, OptimalPlan) {
  TruncationPlan p = optimal_plan(SheetedComplex(3, 0), 2, 2);
  EXPECT_EQ(p.N, 19);
  EXPECT_EQ(p.M, 19);
  EXPECT_NEAR(p.rho, 19 - 6 * pi, 1e-12);
}

TEST(Hyper, MainSumsRegroupTheSeries) {
  SheetedComplex z(9, 0.4);
  cplx a = to_cplx(main_sums50(CoeffKind::B, z, Complex50(Real50("0.3")), 7, 7));
  cplx b = partial_sum(FunctionKind::H1, z, 0.3, 21);
  EXPECT_LT(rel_diff(a, b), 1e-14);
}

TEST(Hyper, ReexpansionImprovesOnOptimalTruncation) {
  for (double r : {3.0, 5.0})
    for (double k : {0.0, 0.3})
      for (bool d : {false, true}) {
        SheetedComplex z(r, 0);
        CoeffKind ck = d ? CoeffKind::D : CoeffKind::B;
        Complex50 ref = hankel1_reference50(d, z, k);
        Real50 plain = abs(reexpanded50(ck, z, k, optimal_plan(z, 0, 0)) - ref);
        Real50 re = abs(reexpanded50(ck, z, k, optimal_plan(z, 6, 6)) - ref);
        EXPECT_LT(re, plain / 100) << r << " " << k << " " << d;
      }
}

TEST(Hyper, DerivativeMatchesDifferenceQuotient) {
  // d/dz at fixed nu: kappa moves with z
  SheetedComplex z(4, 0.2);
  TruncationPlan p = optimal_plan(z, 4, 4);
  const double h = 1e-4;
  cplx a = reexpanded_H1(SheetedComplex::principal(z.value() + h), 0.3 + h, p);
  cplx b = reexpanded_H1(SheetedComplex::principal(z.value() - h), 0.3 - h, p);
  EXPECT_LT(rel_diff((a - b) / (2 * h), reexpanded_H1_prime(z, 0.3, p)), 1e-6);
}

TEST(Hyper, ResidualScaling) {
  ScalingFit f = residual_scaling(3, {2, 4, 8}, 0.0);
  EXPECT_NEAR(f.slope, -4.0 / 3, 0.7);
  ScalingFit g = residual_scaling(0, {2, 4, 8}, 0.0);
  for (double s : g.scaled) EXPECT_LT(s, 10 * g.scaled.front());
}

TEST(Hyper, ResidualScaleOffTheRealAxis) {
  ScalingFit f = residual_scaling(2, {2, 3, 4}, 0.0, 1.2 * pi);
  for (double s : f.scaled) EXPECT_LE(s, 1.0);
}

TEST(Hyper, StokesProfile) {
  auto rows = stokes_profile(10, 0.0, {-pi / 2, -0.7 * pi, -0.3 * pi});
  EXPECT_NEAR(rows[0].terminant.real(), 0.5, 0.01);
  EXPECT_NEAR(rows[1].terminant.real(), 1.0, 1e-3);
  EXPECT_NEAR(rows[2].terminant.real(), 0.0, 1e-3);
  for (const auto& r : rows) EXPECT_LT(std::abs(r.terminant - r.erf_profile), 1.5 / std::sqrt(20 * pi));
}

TEST(Hyper, DomainChecks) {
  EXPECT_THROW(reexpanded_H1(SheetedComplex(3, 3 * pi), 0.0, optimal_plan(SheetedComplex(3, 0), 2, 2)), SectorViolation);
  EXPECT_THROW(stokes_profile(10, 0.0, {0.0}), std::invalid_argument);
  EXPECT_THROW(optimal_plan(SheetedComplex(3, 0), -1, 0), std::invalid_argument);
}
