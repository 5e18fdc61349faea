#pragma once

// Exponentially improved expansions of H1 and H1' near nu = z: the main sums
// regrouped by index mod 3, with the optimally truncated tails re-expanded in
// terminant functions.

#include "nde/oracles.hpp"
#include "nde/series.hpp"
#include "nde/terminant.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace nde {

struct TruncationPlan {
  int N = 1, M = 1;  // main sums over B_{3n}, n < N and B_{3m+1}, m < M
  int K = 0, L = 0;  // terminant re-expansion depths
  double rho = 0, sigma = 0;  // N = 2 pi |z| + rho, M = 2 pi |z| + sigma
  bool expert = false;        // must be set to use K != L
};

inline TruncationPlan optimal_plan(const SheetedComplex& z, int K, int L) {
  if (K < 0 || L < 0) throw std::invalid_argument("optimal_plan: K and L must be non-negative");
  TruncationPlan p;
  const double t = 2 * pi * z.r;
  p.N = p.M = std::max(1, static_cast<int>(std::lround(t)));
  p.K = K;
  p.L = L;
  p.rho = p.N - t;
  p.sigma = p.M - t;
  return p;
}

namespace detail {

inline void require_plan(const SheetedComplex& z, cplx kappa, const TruncationPlan& p) {
  if (z.theta < -2 * pi + sector_delta || z.theta > 3 * pi - sector_delta)
    throw SectorViolation("re-expansion: need -2pi + delta <= arg z <= 3pi - delta");
  if (p.N < 1 || p.M < 1 || p.K < 0 || p.L < 0) throw std::invalid_argument("re-expansion: invalid truncation plan");
  if (!(std::abs(kappa.real()) < std::min(p.N - 2.0 / 3, p.M - 1.0 / 3)))
    throw std::domain_error("re-expansion: |Re kappa| too large for N, M");
}

inline const Real50& pi50() {
  static const Real50 v = boost::math::constants::pi<Real50>();
  return v;
}

// z^{-s} on the sheet of z, 50 digits
inline Complex50 zpow50(const SheetedComplex& z, const Real50& s) {
  Complex50 lz(log(Real50(z.r)), Real50(z.theta));
  return exp(-s * lz);
}

// 6^{(n+1)/3} Gamma((n+1)/3) C_n(kappa) at 50 digits
inline Complex50 scaled_coeff50(CoeffKind ck, int n, const Complex50& kappa) {
  CoeffPolynomial p = ck == CoeffKind::B ? coeff_B(n) : coeff_D(n);
  return eval_float50(p, kappa) * (pow(Real50(6), Real50(n + 1) / 3) * gamma_third50(n + 1));
}

}  // namespace detail

// e^{-pi i/3}/(sqrt3 pi z^{1/3}) sum_{n<N} (-1)^n 6^{n+1/3} C_{3n} Gamma(n+1/3) z^{-n}
//   + e^{pi i/3}/(sqrt3 pi z^{2/3}) sum_{m<M} (-1)^m 6^{m+2/3} C_{3m+1} Gamma(m+2/3) z^{-m}
inline Complex50 main_sums50(CoeffKind ck, const SheetedComplex& z, const Complex50& kappa, int N, int M) {
  const Real50 s3 = sqrt(Real50(3));
  const Real50 half(0.5);
  const Complex50 em(half, -s3 / 2), ep(half, s3 / 2);  // e^{-+ pi i/3}
  const Real50 pre = 1 / (s3 * detail::pi50());
  Complex50 a(0), b(0);
  for (int n = 0; n < N; ++n) {
    Complex50 t = detail::scaled_coeff50(ck, 3 * n, kappa) * detail::zpow50(z, Real50(3 * n + 1) / 3);
    a += (n % 2) ? Complex50(-t) : t;
  }
  for (int m = 0; m < M; ++m) {
    Complex50 t = detail::scaled_coeff50(ck, 3 * m + 1, kappa) * detail::zpow50(z, Real50(3 * m + 2) / 3);
    b += (m % 2) ? Complex50(-t) : t;
  }
  return pre * (em * a + ep * b);
}

// The four terminant sums of the re-expanded remainder.
inline cplx terminant_corrections(CoeffKind ck, const SheetedComplex& z, cplx kappa, const TruncationPlan& p,
                                  const QuadratureConfig& cfg = {}) {
  if (p.K == 0 && p.L == 0) return 0;
  const cplx i(0, 1);
  const cplx nu = z.value() - kappa;
  const cplx em2 = std::exp(-2.0 * pi * i * nu), ep2 = std::exp(2.0 * pi * i * nu);
  const SheetedComplex wm(2 * pi * z.r, z.theta - pi / 2);  // -2 pi i z
  const SheetedComplex wp(2 * pi * z.r, z.theta + pi / 2);  // +2 pi i z
  const double c = 2 / (3 * pi * std::sqrt(3.0));
  auto base = [&](int k) { return sin_third_pi(k + 1) * scaled_coeff(ck, k, kappa) * z.pow(-(k + 1) / 3.0); };
  cplx s = 0;
  for (int k = 0; k < p.K; ++k) {
    cplx b = base(k);
    if (b == 0.0) continue;
    double q = p.N - k / 3.0;
    s += i * exp_i_third_pi(-1) * em2 * c * b * terminant(q, wm, cfg);
    s -= i * ep2 * c * b * exp_i_third_pi(2 * (k + 1)) * terminant(q, wp, cfg);
  }
  for (int l = 0; l < p.L; ++l) {
    cplx b = base(l);
    if (b == 0.0) continue;
    double q = p.M - (l - 1) / 3.0;
    s -= i * exp_i_third_pi(1) * em2 * c * b * terminant(q, wm, cfg);
    s += i * ep2 * c * b * exp_i_third_pi(2 * (l + 1)) * terminant(q, wp, cfg);
  }
  return s;
}

inline Complex50 reexpanded50(CoeffKind ck, const SheetedComplex& z, cplx kappa, const TruncationPlan& p,
                              const QuadratureConfig& cfg = {}) {
  detail::require_plan(z, kappa, p);
  Complex50 k50(Real50(kappa.real()), Real50(kappa.imag()));
  cplx corr = terminant_corrections(ck, z, kappa, p, cfg);
  return main_sums50(ck, z, k50, p.N, p.M) + Complex50(Real50(corr.real()), Real50(corr.imag()));
}

inline cplx to_cplx(const Complex50& v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

inline cplx reexpanded_H1(const SheetedComplex& z, cplx kappa, const TruncationPlan& p,
                          const QuadratureConfig& cfg = {}) {
  return to_cplx(reexpanded50(CoeffKind::B, z, kappa, p, cfg));
}

inline cplx reexpanded_H1_prime(const SheetedComplex& z, cplx kappa, const TruncationPlan& p,
                                const QuadratureConfig& cfg = {}) {
  return to_cplx(reexpanded50(CoeffKind::D, z, kappa, p, cfg));
}

// H1 or H1' with nu = z - kappa. On the positive real axis with real kappa the
// 50-digit Bessel route is used, elsewhere the double-precision contour oracle.
inline Complex50 hankel1_reference50(bool derivative, const SheetedComplex& z, cplx kappa,
                                     const QuadratureConfig& cfg = {}) {
  if (z.theta == 0 && kappa.imag() == 0) {
    Real50 x(z.r), nu = x - Real50(kappa.real());
    return derivative ? hankel1_prime_real50(nu, x) : hankel1_real50(nu, x);
  }
  cplx v = function_value(derivative ? FunctionKind::H1p : FunctionKind::H1, z.value() - kappa, z, cfg);
  return Complex50(Real50(v.real()), Real50(v.imag()));
}

// Exponential scale of the re-expanded residual in each sector (K = L).
inline double residual_scale(const SheetedComplex& z) {
  const double th = z.theta, y = z.r * std::sin(th);
  if (th >= -pi / 2 && th <= pi / 2) return std::exp(-2 * pi * z.r);
  if (th > pi / 2 && th <= 3 * pi / 2) return std::exp(-2 * pi * y);
  if (th < -pi / 2 && th >= -3 * pi / 2) return std::exp(2 * pi * y);
  return std::cosh(2 * pi * y);
}

struct ScalingFit {
  int K = 0;
  double theta = 0;
  std::vector<double> moduli;
  std::vector<double> errors;     // |re-expanded - oracle|
  std::vector<double> scaled;     // errors / residual_scale
  std::vector<double> constants;  // scaled * |z|^{(K+1)/3}
  double slope = 0;               // of log(scaled) against log|z|
};

inline ScalingFit residual_scaling(int K, const std::vector<double>& moduli, cplx kappa, double theta = 0,
                                   const QuadratureConfig& cfg = {}) {
  if (moduli.size() < 2) throw std::invalid_argument("residual_scaling: need at least two moduli");
  ScalingFit f;
  f.K = K;
  f.theta = theta;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double r : moduli) {
    if (r < 2) throw std::invalid_argument("residual_scaling: moduli must be >= 2");
    SheetedComplex z(r, theta);
    TruncationPlan p = optimal_plan(z, K, K);
    Complex50 d = reexpanded50(CoeffKind::B, z, kappa, p, cfg) - hankel1_reference50(false, z, kappa, cfg);
    double e = static_cast<double>(abs(d));
    double s = e / residual_scale(z);
    f.moduli.push_back(r);
    f.errors.push_back(e);
    f.scaled.push_back(s);
    f.constants.push_back(s * std::pow(r, (K + 1) / 3.0));
    double x = std::log(r), y = std::log(s);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(moduli.size());
  f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return f;
}

struct StokesRow {
  double theta;
  cplx terminant;  // -T_N(-2 pi i z), N = round(2 pi r)
  double erf_profile;
};

// Normalised terminant across the Stokes line arg z = -pi/2. For k = 0 the
// combination depends on r and theta only.
inline std::vector<StokesRow> stokes_profile(double r, cplx /*kappa*/, const std::vector<double>& thetas,
                                             const QuadratureConfig& cfg = {}) {
  if (!(r >= 5)) throw std::invalid_argument("stokes_profile: r must be >= 5");
  const int N = static_cast<int>(std::lround(2 * pi * r));
  std::vector<StokesRow> rows;
  for (double th : thetas) {
    if (!(th > -0.75 * pi && th < -0.25 * pi)) throw std::invalid_argument("stokes_profile: theta outside (-0.75pi, -0.25pi)");
    SheetedComplex w(2 * pi * r, th - pi / 2);
    rows.push_back({th, -terminant(N, w, cfg), 0.5 - 0.5 * std::erf((th + pi / 2) * std::sqrt(pi * r))});
  }
  return rows;
}

}  // namespace nde
