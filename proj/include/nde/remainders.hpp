#pragma once

// Remainders of the truncated expansions as integrals along the imaginary
// axis of the Hankel function of imaginary order.

#include "nde/common.hpp"
#include "nde/oracles.hpp"
#include "nde/quadrature.hpp"
#include "nde/series.hpp"

#include <functional>
#include <vector>

namespace nde {

struct RemainderRequest {
  FunctionKind kind = FunctionKind::H1;
  SheetedComplex z;
  cplx kappa = 0;
  int N = 0;
};

enum class RemainderPath { Auto, General };

namespace detail {

inline constexpr double denominator_guard = 1e-8;

inline cplx guarded_inverse(cplx d) {
  if (std::abs(d) < denominator_guard)
    throw SectorViolation("remainder integrand denominator vanishes on the path (Stokes direction)");
  return 1.0 / d;
}

// Upper cut-off in t: past it e^{-2 pi t} t^{(N+1)/3} is below double precision
// relative to the bulk of the integrand.
inline double t_cutoff(double power) { return 14.0 + 1.5 * std::max(0.0, power) / (2 * pi); }

// Integral of 3 u^{n} e^{-2 pi u^3} g(u) over u > 0, i.e. t = u^3 with t^{(n-2)/3} dt.
template <class G>
cplx cube_substituted(G&& g, int n, double tmax, const QuadratureConfig& cfg) {
  const double umax = std::cbrt(tmax);
  std::vector<double> pts{0.0};
  for (double u : {0.1, 0.3, 0.6, 1.0, 1.4, 1.8}) if (u < umax) pts.push_back(u);
  pts.push_back(umax);
  auto f = [&](double u) -> cplx {
    const double t = u * u * u;
    if (!(t > 1e-300)) return cplx(0);
    return 3.0 * std::pow(u, n) * std::exp(-2 * pi * t) * g(u, t);
  };
  return integrate_pieces(f, pts, cfg);
}

inline void require_kappa(int N, cplx kappa, bool derivative) {
  const double a = std::abs(kappa.real()) + (derivative ? 1.0 : 0.0);
  if (!(a < (N + 1) / 3.0))
    throw std::domain_error("remainder: need |Re kappa|" + std::string(derivative ? " + 1" : "") +
                            " < (N+1)/3");
  if (derivative && N <= 2) throw std::domain_error("remainder: derivative kinds need N > 2");
}

// Bracket of the +kappa integral; the -kappa bracket is the same at -q.
inline cplx bracket(FunctionKind base, int N, cplx q) {
  const cplx i(0, 1), w = exp_i_third_pi(1), wb = exp_i_third_pi(-1);
  const cplx E1 = exp_i_third_pi(N + 1), Em1 = exp_i_third_pi(-(N + 1));
  const double E3 = (N % 2) ? 1.0 : -1.0;  // e^{(N+1) pi i}
  switch (base) {
    case FunctionKind::H1:
      return E1 * guarded_inverse(1.0 + i * q * w) - E3 * guarded_inverse(1.0 - i * q);
    case FunctionKind::J:
      return E1 * guarded_inverse(1.0 + i * q * w) - Em1 * guarded_inverse(1.0 + i * q * wb);
    case FunctionKind::Y:
      return E1 * guarded_inverse(1.0 + i * q * w) + Em1 * guarded_inverse(1.0 + i * q * wb) -
             2.0 * E3 * guarded_inverse(1.0 - i * q);
    default: break;
  }
  throw std::logic_error("bracket: unreachable");
}

inline void require_sector(FunctionKind kind, const SheetedComplex& z, cplx kappa) {
  const double th = z.theta;
  switch (base_kind(kind)) {
    case FunctionKind::H1:
      if (!(th > -pi / 2 && th < 1.5 * pi)) throw SectorViolation("H1 remainder needs -pi/2 < arg z < 3pi/2");
      return;
    case FunctionKind::H2:
      if (!(th > -1.5 * pi && th < pi / 2)) throw SectorViolation("H2 remainder needs -3pi/2 < arg z < pi/2");
      return;
    default: {
      if (!(std::abs(th) < pi)) throw SectorViolation("J/Y remainder needs |arg z| < pi");
      const cplx nu = z.value() - kappa;
      if (!(std::abs(nu) > 0 && std::abs(std::arg(nu)) < pi / 2))
        throw SectorViolation("J/Y remainder needs |arg nu| < pi/2");
    }
  }
}

}  // namespace detail

// kappa = 0 rearranged forms. Np is the equal-order index: the remainder after
// Np non-vanishing terms, i.e. R_{2Np}(nu, 0) or R_{2Np+1}(nu, 0) for derivatives.
// Valid for kinds H1, H1p, J, Y, Jp, Yp in the sectors of the general formula.
inline cplx remainder_equal_order(FunctionKind kind, const SheetedComplex& nu, int Np,
                                  const QuadratureConfig& cfg = {}) {
  const bool der = is_derivative(kind);
  if (Np < (der ? 1 : 0)) throw std::domain_error("remainder_equal_order: N too small");
  if (kind == FunctionKind::H2 || kind == FunctionKind::H2p)
    throw std::invalid_argument("remainder_equal_order: use the H1 forms at nu e^{pi i}");
  detail::require_sector(kind, nu, 0.0);
  const cplx i(0, 1);
  const double s3 = std::sqrt(3.0);
  const int r = Np % 3;
  const double sgn = (Np % 2) ? -1.0 : 1.0;  // (-1)^Np
  const cplx nu13 = nu.pow(-1.0 / 3);
  // one term: c nu^{-a/3} int t^{b/3} e^{-2 pi t} g(w) F(t) dt, w = (t/nu)^{1/3}
  struct Term {
    cplx c;
    int a, b;
    std::function<cplx(cplx)> g;
  };
  std::vector<Term> terms;
  const FunctionKind base = base_kind(kind);
  auto Dinv = [&](cplx w) {
    cplx w2 = w * w;
    return detail::guarded_inverse((1.0 + w2 * exp_i_third_pi(2)) * (1.0 + w2));
  };
  auto bessel_den = [&](cplx w) { return detail::guarded_inverse(1.0 + std::pow(w, 6)); };
  if (base == FunctionKind::H1 && !der) {
    const cplx ph = exp_i_third_pi(2 * (2 * Np + 1)), c0 = 1.0 / (s3 * pi);
    auto g0 = [=](cplx w) { return ph * Dinv(w); };
    auto g1 = [=](cplx w) { return ph * exp_i_third_pi(1) * Dinv(w); };
    if (r == 0) {
      terms.push_back({-sgn * c0, 2 * Np + 1, 2 * Np - 2, g0});
      terms.push_back({-sgn * c0, 2 * Np + 3, 2 * Np, g1});
    } else if (r == 1) {
      terms.push_back({sgn * c0, 2 * Np + 3, 2 * Np, g1});
    } else {
      terms.push_back({sgn * c0, 2 * Np + 1, 2 * Np - 2, g0});
    }
  } else if (base == FunctionKind::H1) {
    const cplx ph = exp_i_third_pi(2 * (2 * Np + 2)), c0 = 1.0 / (s3 * pi);
    auto g0 = [=](cplx w) { return ph * Dinv(w); };
    auto g1 = [=](cplx w) { return ph * exp_i_third_pi(1) * Dinv(w); };
    if (r == 0) {
      terms.push_back({sgn * c0, 2 * Np + 2, 2 * Np - 1, g0});
    } else if (r == 1) {
      terms.push_back({-sgn * c0, 2 * Np + 2, 2 * Np - 1, g0});
      terms.push_back({-sgn * c0, 2 * Np + 4, 2 * Np + 1, g1});
    } else {
      terms.push_back({sgn * c0, 2 * Np + 4, 2 * Np + 1, g1});
    }
  } else {
    auto minus43 = [=](cplx w) { return (1.0 - std::pow(w, 4)) * bessel_den(w); };
    auto plus43 = [=](cplx w) { return (1.0 + std::pow(w, 4)) * bessel_den(w); };
    auto plus23 = [=](cplx w) { return (1.0 + w * w) * bessel_den(w); };
    auto minus23 = [=](cplx w) { return (1.0 - w * w) * bessel_den(w); };
    const double cJ = 1 / (2 * s3 * pi), cY = 1 / (2 * pi);
    if (base == FunctionKind::J && !der) {
      if (r == 0) terms.push_back({sgn * cJ, 2 * Np + 1, 2 * Np - 2, minus43});
      else if (r == 1) terms.push_back({sgn * cJ, 2 * Np + 3, 2 * Np, plus23});
      else terms.push_back({-sgn * cJ, 2 * Np + 1, 2 * Np - 2, plus23});
    } else if (base == FunctionKind::Y && !der) {
      if (r == 0) terms.push_back({-sgn * cY, 2 * Np + 1, 2 * Np - 2, plus43});
      else if (r == 1) terms.push_back({sgn * cY, 2 * Np + 3, 2 * Np, minus23});
      else terms.push_back({-sgn * cY, 2 * Np + 1, 2 * Np - 2, minus23});
    } else if (base == FunctionKind::J) {
      if (r == 0) terms.push_back({-sgn * cJ, 2 * Np + 2, 2 * Np - 1, plus23});
      else if (r == 1) terms.push_back({sgn * cJ, 2 * Np + 2, 2 * Np - 1, minus43});
      else terms.push_back({sgn * cJ, 2 * Np + 4, 2 * Np + 1, plus23});
    } else {
      if (r == 0) terms.push_back({-sgn * cY, 2 * Np + 2, 2 * Np - 1, minus23});
      else if (r == 1) terms.push_back({-sgn * cY, 2 * Np + 2, 2 * Np - 1, plus43});
      else terms.push_back({sgn * cY, 2 * Np + 4, 2 * Np + 1, minus23});
    }
  }
  // i H_{it}(it) and H'_{it}(it) are real and positive
  auto F = [&](double t) -> double {
    return der ? hankel1_prime_imag_axis(t, 0.0, cfg).real() : (i * hankel1_imag_axis(t, 0.0, cfg)).real();
  };
  cplx total = 0;
  for (const Term& T : terms) {
    // t^{b/3} dt = 3 u^{b+2} du
    auto g = [&](double u, double t) { return T.g(u * nu13) * F(t); };
    cplx I = detail::cube_substituted(g, T.b + 2, detail::t_cutoff((T.b + 3) / 3.0), cfg);
    total += T.c * nu.pow(-T.a / 3.0) * I;
  }
  return total;
}

// The remainder of `kind` after the terms n < N, from the resurgence integrals.
inline cplx remainder_integral(const RemainderRequest& req, const QuadratureConfig& cfg = {},
                               RemainderPath path = RemainderPath::Auto) {
  const FunctionKind kind = req.kind;
  const bool der = is_derivative(kind);
  const int N = req.N;
  if (N < 0) throw std::domain_error("remainder: N must be non-negative");
  detail::require_kappa(N, req.kappa, der);
  detail::require_sector(kind, req.z, req.kappa);
  if (kind == FunctionKind::H2 || kind == FunctionKind::H2p) {
    RemainderRequest r1{der ? FunctionKind::H1p : FunctionKind::H1, req.z.rotate(pi), -req.kappa, N};
    cplx v = remainder_integral(r1, cfg, path);
    return der ? v : -v;
  }
  if (path == RemainderPath::Auto && req.kappa == 0.0) {
    // drop the vanishing term so N counts through the next surviving one
    int Np = der ? N / 2 : (N + 1) / 2;
    return remainder_equal_order(kind, req.z, Np, cfg);
  }
  const FunctionKind base = base_kind(kind);
  const cplx i(0, 1), kappa = req.kappa;
  const cplx z13 = req.z.pow(-1.0 / 3);
  const cplx ang = (2 * pi * kappa - pi / 2 * N) * i;
  const cplx c = base == FunctionKind::H1 ? cplx(6) : base == FunctionKind::J ? cplx(12) : cplx(0, 12);
  const cplx zp = req.z.pow(-(N + 1) / 3.0);
  const cplx Pp = std::exp(ang) / (c * pi) * zp, Pm = std::exp(-ang) / (c * pi) * zp;
  auto F = [&](double t, cplx k) {
    return der ? hankel1_prime_imag_axis(t, k, cfg) : hankel1_imag_axis(t, k, cfg);
  };
  const bool same = kappa == 0.0;
  auto g = [&](double u, double t) {
    const cplx q = u * z13;
    const cplx fp = F(t, kappa), fm = same ? fp : F(t, -kappa);
    const cplx plus = detail::bracket(base, N, q) * fp, minus = detail::bracket(base, N, -q) * fm;
    return (der ? -Pp : Pp) * plus + Pm * minus;
  };
  return detail::cube_substituted(g, N, detail::t_cutoff((N + 1) / 3.0), cfg);
}

// C_N(kappa) with |R_N^{(H)}(z, kappa)| <= C_N(kappa) / |z|^{(N+1)/3} for 0 <= arg z <= pi.
inline double appendix_b_constant(int N, cplx kappa, const QuadratureConfig& cfg = {}) {
  detail::require_kappa(N, kappa, false);
  const cplx i(0, 1);
  const double ap = std::abs(std::exp(2 * pi * i * kappa)), am = std::abs(std::exp(-2 * pi * i * kappa));
  const bool same = kappa == 0.0;
  auto g = [&](double, double t) -> cplx {
    const double hp = std::abs(hankel1_imag_axis(t, kappa, cfg));
    const double hm = same ? hp : std::abs(hankel1_imag_axis(t, -kappa, cfg));
    return 2 * ap / (3 * pi) * hp + am / (3 * pi) * hm;
  };
  return detail::cube_substituted(g, N, detail::t_cutoff((N + 1) / 3.0), cfg).real();
}

namespace detail {
inline double central_sec_factor(double th) {
  if ((th > -pi / 2 && th < 0) || (th > pi && th < 1.5 * pi)) return std::abs(1 / std::cos(th));
  return 1;
}
}  // namespace detail

// Computable bound on |R_N^{(H)}(z, kappa)| for N = 1 mod 6 from the
// two-integral rearrangement.
inline double computable_bound_general_kappa(const SheetedComplex& z, cplx kappa, int N,
                                             const QuadratureConfig& cfg = {}) {
  if (N < 1 || N % 6 != 1) throw std::domain_error("computable_bound_general_kappa: need N = 1 mod 6");
  if (!(z.theta > -pi / 2 && z.theta < 1.5 * pi))
    throw SectorViolation("computable_bound_general_kappa: need -pi/2 < arg z < 3pi/2");
  detail::require_kappa(N, kappa, false);
  const cplx i(0, 1), ep = std::exp(2 * pi * i * kappa), em = std::exp(-2 * pi * i * kappa);
  auto mix = [&](double t, double s) {
    return std::abs(ep * hankel1_imag_axis(t, kappa, cfg) + s * em * hankel1_imag_axis(t, -kappa, cfg));
  };
  auto g1 = [&](double, double t) -> cplx { return mix(t, -1); };
  auto g2 = [&](double, double t) -> cplx { return mix(t, 1); };
  const double I1 = kappa == 0.0 ? 0.0 : detail::cube_substituted(g1, N, detail::t_cutoff((N + 1) / 3.0), cfg).real();
  const double I2 = detail::cube_substituted(g2, N + 3, detail::t_cutoff((N + 4) / 3.0), cfg).real();
  const double c = 1 / (2 * std::sqrt(3.0) * pi);
  return (c * I1 / std::pow(z.r, (N + 1) / 3.0) + c * I2 / std::pow(z.r, (N + 4) / 3.0)) *
         detail::central_sec_factor(z.theta);
}

// The same rearrangement as a value, for checking it against the general form.
inline cplx remainder_rearranged_general_kappa(const SheetedComplex& z, cplx kappa, int N,
                                               const QuadratureConfig& cfg = {}) {
  if (N < 1 || N % 6 != 1) throw std::domain_error("remainder_rearranged_general_kappa: need N = 1 mod 6");
  detail::require_sector(FunctionKind::H1, z, kappa);
  detail::require_kappa(N, kappa, false);
  const cplx i(0, 1), ep = std::exp(2 * pi * i * kappa), em = std::exp(-2 * pi * i * kappa);
  const cplx ph = exp_i_third_pi(2 * (N + 1)), z13 = z.pow(-1.0 / 3);
  auto den = [&](double u) {
    cplx w2 = std::pow(u * z13, 2);
    return detail::guarded_inverse((1.0 + w2 * exp_i_third_pi(2)) * (1.0 + w2));
  };
  auto g = [&](double s) {
    return [&, s](double u, double t) -> cplx {
      return ph * den(u) * (ep * hankel1_imag_axis(t, kappa, cfg) + s * em * hankel1_imag_axis(t, -kappa, cfg));
    };
  };
  const cplx I1 = kappa == 0.0 ? cplx(0) : detail::cube_substituted(g(-1), N, detail::t_cutoff((N + 1) / 3.0), cfg);
  const cplx I2 = detail::cube_substituted(g(1), N + 3, detail::t_cutoff((N + 4) / 3.0), cfg);
  const cplx c = 1 / (2 * std::sqrt(3.0) * pi);
  return std::pow(i, N + 1) * c * z.pow(-(N + 1) / 3.0) * I1 + std::pow(i, N) * c * z.pow(-(N + 4) / 3.0) * I2;
}

}  // namespace nde
