#include "nde/oracles.hpp"
#include "nde/series.hpp"

#include <gtest/gtest.h>

using namespace nde;

TEST(AsymSeries, LeadingTermOfJAtEqualOrder) {
  // (1/(3 pi)) 6^{1/3} sin(pi/3) Gamma(1/3) 100^{-1/3}
  cplx s = partial_sum(FunctionKind::J, SheetedComplex(100, 0), 0.0, 1);
  EXPECT_NEAR(s.real(), 0.0963694403858496924, 1e-15);
  EXPECT_EQ(s.imag(), 0.0);
}

TEST(AsymSeries, ConvergesTowardsOracle) {
  // J_50(50) and J_10(10), Y_10(10) from mpmath
  SheetedComplex z50(50, 0), z10(10, 0);
  EXPECT_NEAR(partial_sum_equal_order(FunctionKind::J, z50, 8).real(), 0.121409021897615064, 1e-11);
  EXPECT_NEAR(partial_sum_equal_order(FunctionKind::J, z10, 5).real(), 0.207486106633358858, 1e-6);
  EXPECT_NEAR(partial_sum_equal_order(FunctionKind::Y, z10, 5).real(), -0.359814152183402722, 1e-6);
  EXPECT_NEAR(partial_sum_equal_order(FunctionKind::Jp, z10, 5).real(), 0.0843695786317611882, 1e-6);
  EXPECT_NEAR(partial_sum_equal_order(FunctionKind::Yp, z10, 5).real(), 0.160514886378158384, 1e-6);
}

TEST(AsymSeries, ErrorDecreasesWithTerms) {
  SheetedComplex z(20, 0.3);
  cplx kappa = 0.4;
  for (FunctionKind k : {FunctionKind::H1, FunctionKind::H2, FunctionKind::J, FunctionKind::Y, FunctionKind::H1p}) {
    cplx f = function_value(k, z.value() - kappa, z);
    double prev = 1e300;
    for (int N = 2; N <= 8; N += 2) {
      double e = std::abs(f - partial_sum(k, z, kappa, N));
      EXPECT_LT(e, prev) << kind_name(k) << " N=" << N;
      prev = e;
    }
    EXPECT_LT(prev / std::abs(f), 1e-5) << kind_name(k);
  }
}

TEST(AsymSeries, OptimalTruncationDip) {
  // term magnitudes at nu = z = 3 decrease, then grow, with the minimum near 2 pi |z|
  SheetedComplex z(3, 0);
  int best = 0;
  double bm = 1e300;
  for (int n = 0; n <= 120; n += 2) {
    double m = std::abs(series_term(FunctionKind::J, z, 0.0, n));
    if (m > 0 && m < bm) {
      bm = m;
      best = n;
    }
  }
  EXPECT_GT(best, 3 * 2 * pi * 3 * 0.6);
  EXPECT_LT(best, 3 * 2 * pi * 3 * 1.4);
}

TEST(AsymSeries, ConjugateSymmetryOnRealAxis) {
  SheetedComplex z(15, 0);
  cplx a = partial_sum(FunctionKind::H1, z, 0.3, 7), b = partial_sum(FunctionKind::H2, z, 0.3, 7);
  EXPECT_LT(std::abs(a - std::conj(b)), 1e-15);
}

TEST(AsymSeries, HankelContinuationComposesAndPreservesJ) {
  cplx nu(11.6, 0.2);
  SheetedComplex z(12, 0.2);
  HankelPair p = hankel_pair(nu, z);
  auto step = [&](long m, cplx h1, cplx h2) {
    return std::pair{continue_hankel(FunctionKind::H1, m, nu, h1, h2), continue_hankel(FunctionKind::H2, m, nu, h1, h2)};
  };
  auto [a1, a2] = step(1, p.h1, p.h2);
  auto [b1, b2] = step(1, a1, a2);
  auto [c1, c2] = step(2, p.h1, p.h2);
  EXPECT_LT(rel_diff(b1, c1), 1e-12);
  EXPECT_LT(rel_diff(b2, c2), 1e-12);
  // J_nu(z e^{2 pi i m}) = e^{2 pi i m nu} J_nu(z)
  for (long m : {-1L, 1L, 2L}) {
    auto [h1, h2] = step(m, p.h1, p.h2);
    EXPECT_LT(rel_diff(0.5 * (h1 + h2), std::exp(cplx(0, 2 * pi * m) * nu) * 0.5 * (p.h1 + p.h2)), 1e-12) << m;
  }
  EXPECT_THROW(continue_hankel(FunctionKind::H1, 1, 12.0, p.h1, p.h2), IntegerOrder);
}

TEST(AsymSeries, RejectsNegativeN) { EXPECT_THROW(partial_sum(FunctionKind::H1, SheetedComplex(5, 0), 0.0, -1), std::invalid_argument); }
