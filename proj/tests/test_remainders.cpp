#include "nde/oracles.hpp"
#include "nde/remainders.hpp"
#include "nde/series.hpp"

#include <gtest/gtest.h>

using namespace nde;

namespace {
cplx by_subtraction(FunctionKind k, const SheetedComplex& z, cplx kappa, int N) {
  return function_value(k, z.value() - kappa, z) - partial_sum(k, z, kappa, N);
}
}  // namespace

TEST(Remainders, ZeroTermIdentity) {
  SheetedComplex z(10, 0);
  cplx R = remainder_integral({FunctionKind::H1, z, 0.2, 0});
  EXPECT_LT(rel_diff(R, by_subtraction(FunctionKind::H1, z, 0.2, 0)), 1e-9);
}

TEST(Remainders, EqualOrderOffAxis) {
  SheetedComplex z(15, pi / 4);
  EXPECT_LT(rel_diff(remainder_integral({FunctionKind::H1, z, 0.0, 6}), by_subtraction(FunctionKind::H1, z, 0.0, 6)), 1e-9);
}

TEST(Remainders, AllKinds) {
  using K = FunctionKind;
  for (K k : {K::J, K::Y, K::H1p, K::Jp}) {
    SheetedComplex z(12, 0.3);
    EXPECT_LT(rel_diff(remainder_integral({k, z, 0.4, 5}), by_subtraction(k, z, 0.4, 5)), 1e-9) << kind_name(k);
  }
  for (K k : {K::H2, K::Yp, K::H2p}) {
    SheetedComplex z(12, -0.3);
    EXPECT_LT(rel_diff(remainder_integral({k, z, 0.4, 5}), by_subtraction(k, z, 0.4, 5)), 1e-9) << kind_name(k);
  }
}

TEST(Remainders, ConjugationOnRealAxis) {
  SheetedComplex z(12, 0);
  cplx a = remainder_integral({FunctionKind::H1, z, 0.3, 4}), b = remainder_integral({FunctionKind::H2, z, 0.3, 4});
  EXPECT_LT(std::abs(a - std::conj(b)) / std::abs(a), 1e-10);
}

TEST(Remainders, DecayAlongRay) {
  std::vector<double> scaled;
  for (double r : {5.0, 10.0, 20.0, 40.0}) {
    SheetedComplex z(r, pi / 3);
    scaled.push_back(std::abs(remainder_integral({FunctionKind::H1, z, 0.3, 3})) * std::pow(r, 4.0 / 3));
  }
  for (double s : scaled) EXPECT_LT(s, 10 * scaled.front());
}

TEST(Remainders, ImaginaryAxisOracle) {
  // i H1_{it}(it) and H1_{it+0.3}(it) at t = 10 from mpmath
  EXPECT_LT(rel_diff(cplx(0, 1) * hankel1_imag_axis(10, 0.0), {0.415008704554556847, 0}), 1e-12);
  EXPECT_LT(rel_diff(hankel1_imag_axis(10, 0.3), {-0.0518271801684296486, -0.415232322879595785}), 1e-12);
  const double lead = 0.192738880771699385;  // leading term at t = 100
  EXPECT_LT(std::abs((cplx(0, 1) * hankel1_imag_axis(100, 0.0)).real() / lead - 1), 1e-3);
}

TEST(Remainders, UniformConstantDominates) {
  const cplx kappa = 0.3;
  for (int N : {0, 3}) {
    double C = appendix_b_constant(N, kappa);
    for (double th : {0.0, pi / 2, pi}) {
      SheetedComplex z(10, th);
      EXPECT_LE(std::abs(by_subtraction(FunctionKind::H1, z, kappa, N)), C / std::pow(10.0, (N + 1) / 3.0));
    }
  }
}

TEST(Remainders, ComputableBoundAndRearrangement) {
  const cplx kappa = 0.4;
  for (double th : {0.0, pi / 2, 1.4 * pi}) {
    SheetedComplex z(12, th);
    cplx R = remainder_integral({FunctionKind::H1, z, kappa, 7});
    EXPECT_GE(computable_bound_general_kappa(z, kappa, 7), std::abs(R)) << th;
    EXPECT_LT(rel_diff(remainder_rearranged_general_kappa(z, kappa, 7), R), 1e-8) << th;
  }
  EXPECT_THROW(computable_bound_general_kappa(SheetedComplex(12, 0), kappa, 6), std::domain_error);
}

TEST(Remainders, SectorChecks) {
  EXPECT_THROW(remainder_integral({FunctionKind::H1, SheetedComplex(12, 3 * pi), 0.3, 4}), SectorViolation);
}
