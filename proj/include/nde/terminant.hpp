#pragma once

// Scaled terminant T_p(w) = e^{i pi p} Gamma(p) Gamma(1-p, w) / (2 pi i) on the
// logarithmic surface, plus the error-function smoothing approximation.

#include "nde/common.hpp"
#include "nde/oracles.hpp"
#include "nde/quadrature.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace nde {

struct TerminantQuery {
  double p = 1;
  SheetedComplex w;
};

inline void require_query(const TerminantQuery& q) {
  if (!(q.p > 0)) throw std::domain_error("terminant: p must be positive");
}

namespace detail {

// Split theta into a principal angle in (-pi, pi] and a sheet index m.
inline long sheet_index(double theta) { return static_cast<long>(std::ceil((theta - pi) / (2 * pi))); }

// T_p(w e^{2 pi i m}) = q^m T_p(w) + (1 - q^m)/(1 - q),  q = e^{-2 pi i p}.
// The quotient is a finite geometric sum, so integer p needs no limit.
inline cplx terminant_monodromy(double p, long m, cplx t0) {
  if (m == 0) return t0;
  const cplx q = std::exp(cplx(0, -2 * pi * p));
  cplx s = 0, qj = 1;
  if (m > 0) {
    for (long j = 0; j < m; ++j, qj *= q) s += qj;
    return qj * t0 + s;
  }
  const cplx qi = 1.0 / q;
  for (long j = 1; j <= -m; ++j) {
    qj *= qi;
    s -= qj;
  }
  return qj * t0 + s;
}

}  // namespace detail

// Cauchy-type integral, valid for |arg w| < pi.
inline cplx terminant_integral(double p, const SheetedComplex& w, const QuadratureConfig& cfg = {}) {
  if (!(p > 0)) throw std::domain_error("terminant: p must be positive");
  if (!(std::abs(w.theta) < pi)) throw SectorViolation("terminant_integral: need |arg w| < pi");
  const cplx w0 = w.value();
  // normalise the integrand by its peak at t = p - 1 (or near 0 for p < 1)
  const double tp = std::max(p - 1, 1e-3);
  const double L = (p - 1) * std::log(tp) - tp;
  auto f = [&](double t) -> cplx {
    if (t <= 0) return 0;
    return std::exp((p - 1) * std::log(t) - t - L) / (w0 + t);
  };
  double T = tp + 1;
  while ((p - 1) * std::log(T) - T - L > -50) T *= 1.5;
  std::vector<double> br{0, T};
  for (double b : {0.5 * tp, tp, tp + 2 * std::sqrt(tp + 1), w.r, 1.0})
    if (b > 0 && b < T) br.push_back(b);
  cplx I = integrate_pieces(f, br, cfg);
  cplx lead = cplx(0, pi * p) + (1 - p) * cplx(std::log(w.r), w.theta) - w0 + L;
  return std::exp(lead) * I / cplx(0, 2 * pi);
}

// Incomplete-gamma route on any sheet.
inline cplx terminant_gamma(double p, const SheetedComplex& w, const QuadratureConfig& cfg = {}) {
  if (!(p > 0)) throw std::domain_error("terminant: p must be positive");
  long m = detail::sheet_index(w.theta);
  SheetedComplex w0(w.r, w.theta - 2 * pi * m);
  cplx g = incomplete_gamma_principal(cplx(1 - p, 0), w0, cfg);
  cplx t0 = std::exp(cplx(0, pi * p) + std::lgamma(p)) * g / cplx(0, 2 * pi);
  return detail::terminant_monodromy(p, m, t0);
}

// Default: Cauchy integral on the principal sheet away from the cut, the
// incomplete gamma near it, then the monodromy relation.
inline cplx terminant(const TerminantQuery& q, const QuadratureConfig& cfg = {}) {
  require_query(q);
  long m = detail::sheet_index(q.w.theta);
  SheetedComplex w0(q.w.r, q.w.theta - 2 * pi * m);
  cplx t0 = std::abs(w0.theta) < 0.95 * pi ? terminant_integral(q.p, w0, cfg) : terminant_gamma(q.p, w0, cfg);
  return detail::terminant_monodromy(q.p, m, t0);
}

inline cplx terminant(double p, const SheetedComplex& w, const QuadratureConfig& cfg = {}) {
  return terminant(TerminantQuery{p, w}, cfg);
}

// Solution of c^2/2 = 1 + i(phi - pi) - e^{i(phi - pi)} on the branch with
// c ~ phi - pi near phi = pi.
inline cplx c_series(double phi) {
  const double s = phi - pi;
  return cplx(s, 0) + cplx(0, 1.0 / 6) * (s * s) - cplx(1.0 / 36, 0) * (s * s * s) -
         cplx(0, 1.0 / 270) * (s * s * s * s);
}

namespace detail {

inline cplx c_residual(cplx c, double s) { return 0.5 * c * c - (1.0 + cplx(0, s) - std::exp(cplx(0, s))); }

inline cplx c_newton(cplx c, double s) {
  for (int it = 0; it < 60; ++it) {
    cplx dc = c_residual(c, s) / c;
    c -= dc;
    if (std::abs(dc) <= 1e-16 * std::max(1.0, std::abs(c))) return c;
  }
  if (std::abs(c_residual(c, s)) > 1e-13) throw NonConvergence("c_of_phi: Newton iteration stalled");
  return c;
}

}  // namespace detail

inline cplx c_of_phi(double phi) {
  if (!(phi > -pi && phi < 3 * pi)) throw SectorViolation("c_of_phi: need -pi < phi < 3 pi");
  const double s = phi - pi;
  if (std::abs(s) < 1e-4) return c_series(phi);
  if (std::abs(s) <= 0.5) return detail::c_newton(c_series(phi), s);
  // continuation from the trust region in small steps
  const double dir = s > 0 ? 1 : -1;
  double a = 0.5 * dir;
  cplx c = detail::c_newton(c_series(pi + a), a);
  cplx prev = c;
  double aprev = a;
  const double h = 0.05;
  while (std::abs(s - a) > 1e-15) {
    double b = std::abs(s - a) > h ? a + dir * h : s;
    cplx guess = c;
    if (aprev != a) guess = c + (c - prev) * ((b - a) / (a - aprev));
    prev = c;
    aprev = a;
    c = detail::c_newton(guess, b);
    a = b;
  }
  return c;
}

// Complex error function: Maclaurin or Kummer series near the origin,
// Laplace continued fraction for erfc further out.
inline cplx erf_c(cplx z) {
  if (z.real() < 0) return -erf_c(-z);
  const double two_over_sqrtpi = 1.1283791670955125739;
  const double az = std::abs(z);
  const cplx z2 = z * z;
  if (az <= 2.5 || z.real() < 0.1 * std::abs(z.imag())) {
    if (z2.real() >= 0 && az > 0.5) {
      // erf z = 2z/sqrt(pi) e^{-z^2} sum (2z^2)^n / (2n+1)!!
      cplx term = 1, sum = 1;
      for (int n = 1; n < 2000; ++n) {
        term *= 2.0 * z2 / double(2 * n + 1);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
      }
      return two_over_sqrtpi * z * std::exp(-z2) * sum;
    }
    cplx term = z, sum = z;
    for (int n = 1; n < 4000; ++n) {
      term *= -z2 / double(n);
      cplx add = term / double(2 * n + 1);
      sum += add;
      if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return two_over_sqrtpi * sum;
  }
  // erfc z = e^{-z^2}/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))), modified Lentz
  const double tiny = 1e-300;
  cplx f = z, C = z, D = 0;
  for (int k = 1; k < 20000; ++k) {
    double a = 0.5 * k;
    D = z + a * D;
    if (std::abs(D) < tiny) D = tiny;
    C = z + a / C;
    if (std::abs(C) < tiny) C = tiny;
    D = 1.0 / D;
    cplx delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 - std::exp(-z2) / (1.7724538509055160273 * f);
}

inline constexpr double sector_delta = 0.05 * pi;

// e^{-2 pi i p} T_p(w) ~ -1/2 + (1/2) erf(-conj(c(-phi)) sqrt(|w|/2)), phi = arg w.
// Returns the approximation to T_p(w) itself.
inline cplx smoothing_approx(double p, const SheetedComplex& w) {
  const double phi = w.theta;
  if (phi < -3 * pi + sector_delta || phi > pi - sector_delta)
    throw SectorViolation("smoothing_approx: need -3pi + delta <= arg w <= pi - delta");
  cplx c = c_of_phi(-phi);
  cplx v = -0.5 + 0.5 * erf_c(-std::conj(c) * std::sqrt(w.r / 2));
  return std::exp(cplx(0, 2 * pi * p)) * v;
}

// e^{-2 pi i p} T_p(w), the normalised combination approximated by smoothing_approx.
inline cplx normalised_terminant(double p, const SheetedComplex& w, const QuadratureConfig& cfg = {}) {
  return std::exp(cplx(0, -2 * pi * p)) * terminant(p, w, cfg);
}

}  // namespace nde
