#pragma once

// Expansion-independent reference values: Hankel and Bessel functions from
// contour integrals, the Hankel factor on the imaginary axis, and the upper
// incomplete gamma function on any sheet.

#include "nde/common.hpp"
#include "nde/quadrature.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <utility>

namespace nde {

namespace detail {

// Advance x until the log-magnitude drops well below ref.
template <class LogMag>
double decay_length(LogMag&& logmag, double ref, double drop = 60) {
  double x = 0.25;
  for (int i = 0; i < 60; ++i, x *= 1.5)
    if (logmag(x) < ref - drop) return x;
  throw NonConvergence("integrand does not decay along the contour tail");
}

}  // namespace detail

// H^(1)_nu(z) from the Schlafli-Sommerfeld integral. Endpoints sit in the
// centres of the valleys at -inf + i theta and +inf + i(pi - theta); the two
// finite legs follow the steepest directions out of the coalescing saddle at 0.
inline cplx hankel1_contour(cplx nu, const SheetedComplex& z, const QuadratureConfig& cfg = {}) {
  const double th = z.theta;
  if (std::abs(th) > pi / 2 + 1e-12) throw SectorViolation("hankel1_contour: need |arg z| <= pi/2");
  const cplx zc = z.value();
  auto f = [&](cplx t) { return zc * std::sinh(t) - nu * t; };
  auto g = [&](cplx t) { return std::exp(f(t)); };

  const double a_in = pi - th / 3;
  const double s0 = std::abs(th) < 1e-8 ? 3.0 : th / std::sin(th / 3);
  const cplx Q = std::polar(s0, a_in);
  const double a_out = (pi - th) / 3;
  const double s1 = (pi - th) / std::sin(a_out);
  const cplx P = std::polar(s1, a_out);

  // Reference scale: largest log-magnitude on the finite legs.
  double ref = 0;
  for (int i = 0; i <= 64; ++i) {
    double u = i / 64.0;
    ref = std::max({ref, f(Q * u).real(), f(P * u).real()});
  }
  double X_in = detail::decay_length([&](double x) { return f(Q - x).real(); }, ref);
  double X_out = detail::decay_length([&](double x) { return f(P + x).real(); }, ref);

  std::vector<double> uu{0, 0.05, 0.15, 0.3, 0.5, 0.75, 1};
  PathIntegral<cplx> I(cfg);
  I.add([&](double x) { return g(Q - x); }, {0, 0.5, 2, X_in});     // -inf + i theta -> Q
  I.add([&](double u) { return g(Q * (1 - u)); }, uu, -Q);          // Q -> 0
  I.add([&](double u) { return g(P * u); }, uu, P);                 // 0 -> P
  I.add([&](double x) { return g(P + x); }, {0, 0.5, 2, X_out});    // P -> +inf + i(pi - theta)
  cplx s = I.result();
  return s / cplx(0, pi);
}

// H^(2)_nu(z) = conj H^(1)_{conj nu}(conj z)
inline cplx hankel2_contour(cplx nu, const SheetedComplex& z, const QuadratureConfig& cfg = {}) {
  return std::conj(hankel1_contour(std::conj(nu), z.conj(), cfg));
}

// sin(j x) / sin(x) as the entire Chebyshev form U_{j-1}(cos x).
inline cplx sin_ratio(int j, cplx x) {
  if (j == 0) return 0;
  if (j < 0) return -sin_ratio(-j, x);
  cplx c2 = 2.0 * std::cos(x), um = 0, u = 1;
  for (int k = 1; k < j; ++k) {
    cplx nx = c2 * u - um;
    um = u;
    u = nx;
  }
  return u;
}

struct HankelPair {
  cplx h1, h2;
};

// Principal-sector pair at order nu. The contour is fastest when the order is
// close to the argument, so the reflected order is used when that is closer:
// H1_{-nu} = e^{nu pi i} H1_nu, H2_{-nu} = e^{-nu pi i} H2_nu.
inline HankelPair hankel_pair_principal(cplx nu, const SheetedComplex& z0, const QuadratureConfig& cfg) {
  const cplx zc = z0.value();
  if (std::abs(-nu - zc) < std::abs(nu - zc)) {
    const cplx ip(0, pi);
    return {std::exp(-ip * nu) * hankel1_contour(-nu, z0, cfg), std::exp(ip * nu) * hankel2_contour(-nu, z0, cfg)};
  }
  return {hankel1_contour(nu, z0, cfg), hankel2_contour(nu, z0, cfg)};
}

// Both Hankel functions anywhere on the logarithmic surface, by half-turn
// continuation from |arg z| <= pi/2. For odd half-turns the relations are
// written in terms of the reflected order.
inline HankelPair hankel_pair(cplx nu, const SheetedComplex& z, const QuadratureConfig& cfg = {}) {
  long m = std::lround(z.theta / pi);
  SheetedComplex z0(z.r, z.theta - m * pi);
  const cplx x = pi * nu;
  const cplx ip(0, pi);
  if (m % 2 == 0) {
    auto [h1, h2] = hankel_pair_principal(nu, z0, cfg);
    if (m == 0) return {h1, h2};
    int k = static_cast<int>(m / 2);
    return {-sin_ratio(2 * k - 1, x) * h1 - std::exp(-ip * nu) * sin_ratio(2 * k, x) * h2,
            sin_ratio(2 * k + 1, x) * h2 + std::exp(ip * nu) * sin_ratio(2 * k, x) * h1};
  }
  cplx mu = -nu;
  auto [h1, h2] = hankel_pair_principal(mu, z0, cfg);
  int mm = static_cast<int>(m);
  return {-std::exp(-ip * nu) * sin_ratio(mm - 1, x) * h1 - sin_ratio(mm, x) * h2,
          std::exp(ip * nu) * sin_ratio(mm + 1, x) * h2 + sin_ratio(mm, x) * h1};
}

// Reference value of any of the eight kinds at order nu, argument z.
inline cplx function_value(FunctionKind kind, cplx nu, const SheetedComplex& z, const QuadratureConfig& cfg = {}) {
  if (is_derivative(kind)) {
    FunctionKind b = base_kind(kind);
    return 0.5 * (function_value(b, nu - 1.0, z, cfg) - function_value(b, nu + 1.0, z, cfg));
  }
  if ((kind == FunctionKind::J || kind == FunctionKind::Y) && std::abs(z.theta) > pi) {
    // reduce by whole turns first; forming J from continued Hankel functions
    // cancels badly off the principal sheet
    long k = static_cast<long>(std::ceil((z.theta - pi) / (2 * pi)));
    SheetedComplex z0(z.r, z.theta - 2 * pi * k);
    const cplx J0 = function_value(FunctionKind::J, nu, z0, cfg), i(0, 1);
    if (kind == FunctionKind::J) return std::exp(2.0 * pi * i * double(k) * nu) * J0;
    const cplx Y0 = function_value(FunctionKind::Y, nu, z0, cfg), x = pi * nu;
    return std::exp(-2.0 * pi * i * double(k) * nu) * Y0 + 2.0 * i * sin_ratio(2 * static_cast<int>(k), x) * std::cos(x) * J0;
  }
  HankelPair p = hankel_pair(nu, z, cfg);
  switch (kind) {
    case FunctionKind::H1: return p.h1;
    case FunctionKind::H2: return p.h2;
    case FunctionKind::J: return 0.5 * (p.h1 + p.h2);
    case FunctionKind::Y: return (p.h1 - p.h2) / cplx(0, 2);
    default: break;
  }
  throw std::logic_error("function_value: unreachable");
}

// Real order and argument, from the classical Schlafli integrals.
inline std::pair<double, double> bessel_JY_real(double nu, double x, const QuadratureConfig& cfg = {}) {
  if (!(nu >= 0) || !(x > 0)) throw std::domain_error("bessel_JY_real: need nu >= 0, x > 0");
  std::vector<double> br{0, pi / 4, pi / 2, 3 * pi / 4, pi};
  double j1 = integrate_pieces([&](double t) { return std::cos(nu * t - x * std::sin(t)); }, br, cfg) / pi;
  double y1 = integrate_pieces([&](double t) { return std::sin(x * std::sin(t) - nu * t); }, br, cfg) / pi;
  // tails: exponent nu t - x sinh t is maximal at cosh t = nu / x
  double tpk = nu > x ? std::acosh(nu / x) : 0;
  double lpk = nu * tpk - x * std::sinh(tpk);
  double T = tpk + detail::decay_length([&](double s) { return nu * (tpk + s) - x * std::sinh(tpk + s); }, lpk, 40);
  std::vector<double> tb{0, tpk, tpk + 1, T};
  double sn = std::sin(nu * pi), cn = std::cos(nu * pi);
  double j2 = 0;
  if (sn != 0)
    j2 = integrate_pieces([&](double t) { return std::exp(-nu * t - x * std::sinh(t)); }, {0, 1, T}, cfg);
  double y2 = integrate_pieces(
      [&](double t) { return (std::exp(nu * t - x * std::sinh(t)) + cn * std::exp(-nu * t - x * std::sinh(t))); }, tb,
      cfg);
  return {j1 - sn / pi * j2, y1 - y2 / pi};
}

// H^(1)_{it+kappa}(it) = (2/(pi i)) e^{-i pi (it+kappa)/2} K_{it+kappa}(t). The
// K-integral runs along Im u = gamma, close to the saddle at i pi/2, so the
// factor e^{pi t/2} is absorbed without cancellation.
inline cplx hankel1_imag_axis(double t, cplx kappa, const QuadratureConfig& cfg = {}) {
  if (!(t > 0)) throw std::domain_error("hankel1_imag_axis: t must be positive");
  const cplx mu(kappa.real(), t + kappa.imag());
  const double delta = std::min(pi / 2, std::cbrt(6.0 / t));
  const double gam = pi / 2 - delta;
  auto ex = [&](double s) {
    cplx u(s, gam);
    return -t * std::cosh(u) + mu * u + pi * t / 2;
  };
  double ref = std::max(ex(0).real(), 0.0);
  // the kappa term can move the peak; scan for it
  for (double s = -8; s <= 8; s += 0.5) ref = std::max(ref, ex(s).real());
  double Sp = detail::decay_length([&](double s) { return ex(s).real(); }, ref, 45);
  double Sm = detail::decay_length([&](double s) { return ex(-s).real(); }, ref, 45);
  auto g = [&](double s) { return std::exp(ex(s)); };
  cplx E = 0.5 * integrate_pieces(g, {-Sm, -1, 0, 1, Sp}, cfg) * cplx(1, 0);
  return 2.0 / cplx(0, pi) * std::exp(cplx(0, -pi / 2) * kappa) * E;
}

// d/dx H^(1)_{mu}(x) at x = it via 2C' = C_{mu-1} - C_{mu+1}.
inline cplx hankel1_prime_imag_axis(double t, cplx kappa, const QuadratureConfig& cfg = {}) {
  return 0.5 * (hankel1_imag_axis(t, kappa - 1.0, cfg) - hankel1_imag_axis(t, kappa + 1.0, cfg));
}

// Complex log-gamma, Lanczos (g = 7) with reflection.
inline cplx lgamma_c(cplx z) {
  static const double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) return std::log(pi / std::sin(pi * z)) - lgamma_c(1.0 - z);
  z -= 1.0;
  cplx x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
  cplx t = z + 7.5;
  return 0.5 * std::log(2 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline cplx gamma_c(cplx z) {
  if (z.imag() == 0) return std::tgamma(z.real());
  return std::exp(lgamma_c(z));
}

// Gamma(a, w) on the principal sheet, |arg w| < pi (arg w = pi allowed, upper side).
inline cplx incomplete_gamma_principal(cplx a, const SheetedComplex& w, const QuadratureConfig& cfg = {}) {
  if (w.theta <= -pi || w.theta > pi) throw SectorViolation("incomplete_gamma_principal: need -pi < arg w <= pi");
  const cplx w0 = w.value();
  double beta = 0;
  // tilt the ray so that |w + s e^{i beta}| does not dip below |w|
  if (std::abs(w.theta) > pi / 2) beta = std::clamp(w.theta / 2, -0.42 * pi, 0.42 * pi);
  const cplx dir = std::polar(1.0, beta);
  // log of the integrand (w + s dir)^{a-1} e^{-s dir}; the branch follows the
  // continuous argument along the ray starting from theta
  auto logf = [&](double s) {
    cplx tt = w0 + s * dir;
    double ar = std::arg(tt);
    if (w.theta == pi && tt.imag() <= 0) ar = pi;  // start point on the cut, upper side
    return (a - 1.0) * cplx(std::log(std::abs(tt)), ar) - s * dir;
  };
  double ref = -1e300;
  for (double s = 0; s <= 4 * (std::abs(a) + std::abs(w0) + 4); s += 0.25) ref = std::max(ref, logf(s).real());
  double S = detail::decay_length([&](double s) { return logf(s).real(); }, ref, 45);
  std::vector<double> br{0, S};
  double apk = std::abs(a - 1.0);
  for (double b : {0.1, 1.0, apk, apk + 2 * std::sqrt(apk + 1), 2 * apk + 5})
    if (b > 0 && b < S) br.push_back(b);
  cplx I = integrate_pieces([&](double s) { return std::exp(logf(s)); }, br, cfg);
  return std::exp(-w0) * dir * I;
}

// (1 - e^{2 pi i m a}) Gamma(a), with the removable singularity at a = 0, -1, ...
inline cplx monodromy_gamma_term(cplx a, long m) {
  if (m == 0) return 0;
  double nr = std::round(-a.real());
  if (nr >= 0 && std::abs(a + nr) < 1e-12) {
    long n = static_cast<long>(nr);
    double sgn = (n % 2) ? -1 : 1;
    return cplx(0, -2 * pi * m) * sgn / std::tgamma(double(n + 1));
  }
  return (1.0 - std::exp(cplx(0, 2 * pi * m) * a)) * gamma_c(a);
}

// Gamma(a, w) on any sheet: Gamma(a, w e^{2 pi i m}) = e^{2 pi i m a} Gamma(a, w) + (1 - e^{2 pi i m a}) Gamma(a).
inline cplx upper_incomplete_gamma(cplx a, const SheetedComplex& w, const QuadratureConfig& cfg = {}) {
  long m = static_cast<long>(std::ceil((w.theta - pi) / (2 * pi)));
  SheetedComplex w0(w.r, w.theta - 2 * pi * m);
  cplx g = incomplete_gamma_principal(a, w0, cfg);
  if (m == 0) return g;
  return std::exp(cplx(0, 2 * pi * m) * a) * g + monodromy_gamma_term(a, m);
}

// H^(1)_nu(x) for real order and positive real argument at 50 digits, via
// the Boost Bessel functions. Used where double-precision residuals vanish.
inline Complex50 hankel1_real50(const Real50& nu, const Real50& x) {
  if (!(x > 0)) throw std::domain_error("hankel1_real50: x must be positive");
  return Complex50(boost::math::cyl_bessel_j(nu, x), boost::math::cyl_neumann(nu, x));
}

inline Complex50 hankel1_prime_real50(const Real50& nu, const Real50& x) {
  return (hankel1_real50(nu - 1, x) - hankel1_real50(nu + 1, x)) / 2;
}

}  // namespace nde
