#pragma once

// Explicit bounds for the equal-order remainders R_N(nu) (kappa = 0), where N
// counts the non-vanishing terms kept: R_{2N}(nu, 0), or R_{2N+1}(nu, 0) for
// the derivative kinds.

#include "nde/common.hpp"
#include "nde/oracles.hpp"
#include "nde/series.hpp"

#include <string>
#include <vector>

namespace nde {

enum class SectorClass { Central, Rotated, NearStokes };

inline std::string sector_class_name(SectorClass c) {
  switch (c) {
    case SectorClass::Central: return "central";
    case SectorClass::Rotated: return "rotated";
    case SectorClass::NearStokes: return "near_stokes";
  }
  return "?";
}

inline SectorClass parse_sector_class(const std::string& s) {
  for (auto c : {SectorClass::Central, SectorClass::Rotated, SectorClass::NearStokes})
    if (sector_class_name(c) == s) return c;
  throw std::invalid_argument("unknown sector class: " + s);
}

struct BoundSpec {
  FunctionKind kind = FunctionKind::H1;
  int N = 0;
  SectorClass sector_class = SectorClass::Central;
  double theta = 0;
  int residue() const { return ((N % 3) + 3) % 3; }
};

// |C_k(0)| for C = B or D
inline double abs_coeff_at_zero(CoeffKind kind, int k) {
  CoeffPolynomial p = kind == CoeffKind::B ? coeff_B(k) : coeff_D(k);
  return std::abs(to_real<double>(p.c.empty() ? Rational(0) : p.c[0]));
}

// Minimising angles ------------------------------------------------------------

// sin(theta - 2 phi) = ((p-1)/(p+1)) sin theta, p the power of the term.
enum class MeijerSin { Eq26, Eq30, HpLow, HpHigh };

inline double meijer_sin_power(MeijerSin v, int N) {
  switch (v) {
    case MeijerSin::Eq26: return (2 * N + 3) / 3.0;
    case MeijerSin::Eq30: return (2 * N + 1) / 3.0;
    case MeijerSin::HpLow: return (2 * N + 2) / 3.0;
    case MeijerSin::HpHigh: return (2 * N + 4) / 3.0;
  }
  throw std::logic_error("meijer_sin_power: unreachable");
}

// a cos(3 phi - 2 theta) = b cos(phi - 2 theta) with the integer pairs (a, b)
// as stated for the J and J' bounds.
enum class MeijerCos { J1, J2, J3, Jp1, Jp2, Jp3 };

inline std::pair<int, int> meijer_cos_coefficients(MeijerCos v, int N) {
  switch (v) {
    case MeijerCos::J1: return {2 * N + 7, 2 * N - 5};
    case MeijerCos::J2: return {2 * N + 9, 2 * N - 3};
    case MeijerCos::J3: return {2 * N + 11, 2 * N - 1};
    case MeijerCos::Jp1: return {2 * N + 8, 2 * N - 6};
    case MeijerCos::Jp2: return {2 * N + 10, 2 * N - 2};
    case MeijerCos::Jp3: return {2 * N + 12, 2 * N};
  }
  throw std::logic_error("meijer_cos_coefficients: unreachable");
}

inline double meijer_cos_power(MeijerCos v, int N) {
  switch (v) {
    case MeijerCos::J1: return (2 * N + 1) / 3.0;
    case MeijerCos::J2: return (2 * N + 3) / 3.0;
    case MeijerCos::J3: return (2 * N + 5) / 3.0;
    case MeijerCos::Jp1: return (2 * N + 2) / 3.0;
    case MeijerCos::Jp2: return (2 * N + 4) / 3.0;
    case MeijerCos::Jp3: return (2 * N + 6) / 3.0;
  }
  throw std::logic_error("meijer_cos_power: unreachable");
}

namespace detail {

inline std::pair<double, double> sin_bracket(double th) {
  if (th >= 1.5 * pi && th < 2 * pi) return {th - 1.5 * pi, pi / 2};
  if (th > pi && th < 1.5 * pi) return {0, th - pi};
  if (th > -pi && th <= -pi / 2) return {-pi / 2, pi / 2 + th};
  if (th > -pi / 2 && th < 0) return {th, 0};
  throw NoBracket("no Meijer bracket for theta = " + std::to_string(th));
}

inline std::pair<double, double> cos_bracket(double th) {
  if (th >= 0.75 * pi && th < pi) return {th - pi / 2, pi / 2};
  if (th >= pi / 2 && th < 0.75 * pi) return {th - pi / 2, th - pi / 4};
  if (th > pi / 4 && th < pi / 2) return {0, th - pi / 4};
  if (th > -pi && th <= -0.75 * pi) return {-pi / 2, pi / 2 + th};
  if (th > -0.75 * pi && th <= -pi / 2) return {pi / 4 + th, pi / 2 + th};
  if (th > -pi / 2 && th < -pi / 4) return {pi / 4 + th, 0};
  throw NoBracket("no Meijer bracket for theta = " + std::to_string(th));
}

// Bisection to 1e-12 (or to adjacent doubles). If the end values do not
// differ in sign the bracket is scanned for the first sign change.
template <class F>
double bisect(F&& f, double a, double b) {
  double fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa < 0) == (fb < 0)) {
    const int n = 512;
    double x0 = a, f0 = fa;
    bool found = false;
    for (int k = 1; k <= n; ++k) {
      double x1 = a + (b - a) * k / n, f1 = f(x1);
      if ((f0 < 0) != (f1 < 0)) {
        a = x0, b = x1, fa = f0, found = true;
        break;
      }
      x0 = x1, f0 = f1;
    }
    if (!found) throw NoBracket("implicit angle equation has no sign change on its bracket");
  }
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    double m = 0.5 * (a + b), fm = f(m);
    if (fm == 0) return m;
    if ((fm < 0) == (fa < 0)) a = m, fa = fm;
    else b = m;
  }
  return 0.5 * (a + b);
}

}  // namespace detail

inline double meijer_angle_sin(MeijerSin v, double theta, int N) {
  auto [a, b] = detail::sin_bracket(theta);
  const double p = meijer_sin_power(v, N), c = (p - 1) / (p + 1), st = std::sin(theta);
  return detail::bisect([&](double ph) { return std::sin(theta - 2 * ph) - c * st; }, a, b);
}

inline double meijer_angle_cos(MeijerCos v, double theta, int N) {
  auto [a, b] = detail::cos_bracket(theta);
  auto [A, B] = meijer_cos_coefficients(v, N);
  return detail::bisect([&](double ph) { return A * std::cos(3 * ph - 2 * theta) - B * std::cos(ph - 2 * theta); }, a,
                        b);
}

// Pointwise inequalities used in the derivations ------------------------------

inline double sector_factor_sec(double th) {
  if ((th > -pi / 2 && th < 0) || (th > pi && th < 1.5 * pi)) return std::abs(1 / std::cos(th));
  if (th >= 0 && th <= pi) return 1;
  throw SectorViolation("sec factor needs -pi/2 < theta < 3pi/2");
}

inline double sector_factor_csc(double th) {
  const double a = std::abs(th);
  if (a <= pi / 4) return 1;
  if (a < pi / 2) return std::abs(1 / std::sin(2 * th));
  throw SectorViolation("csc factor needs |theta| < pi/2");
}

inline bool inequality_sec_holds(double r, double th) {
  const cplx e = std::polar(r, -2 * th / 3);
  const double lhs = 1 / (std::abs(1.0 + e * exp_i_third_pi(2)) * std::abs(1.0 + e));
  return lhs <= sector_factor_sec(th) * (1 + 1e-12);
}

inline bool inequality_csc_holds(double r, double th) {
  const double lhs = 1 / std::abs(1.0 + std::polar(r, -2 * th));
  return lhs <= sector_factor_csc(th) * (1 + 1e-12);
}

inline bool inequality_csc_ratio_holds(double r, double th) {
  const double lhs = std::abs((1.0 - std::polar(std::cbrt(r), -2 * th / 3)) / (1.0 + std::polar(r, -2 * th)));
  return lhs <= sector_factor_csc(th) * (1 + 1e-12);
}

// Bound assembly ---------------------------------------------------------------

namespace detail {

// Constant in front of 6^p |C_k(0)| Gamma(p) / |nu|^p for each family.
inline double family_amplitude(FunctionKind base) {
  switch (base) {
    case FunctionKind::H1: return 2 / (3 * pi) * std::sqrt(3.0) / 2;
    case FunctionKind::J: return 1 / (3 * pi) * std::sqrt(3.0) / 2;
    case FunctionKind::Y: return 2 / (3 * pi) * 0.75;
    default: break;
  }
  throw std::logic_error("family_amplitude: unreachable");
}

// The term built from C_k(0): amplitude 6^p |C_k(0)| Gamma(p) / |nu|^p, p = (k+1)/3.
inline double omitted_term(FunctionKind kind, int k, double absnu) {
  const CoeffKind ck = is_derivative(kind) ? CoeffKind::D : CoeffKind::B;
  const double p = (k + 1) / 3.0;
  return family_amplitude(base_kind(kind)) * std::pow(6.0, p) * abs_coeff_at_zero(ck, k) * gamma_third(k + 1) /
         std::pow(absnu, p);
}

inline double rotated_sin_factor(MeijerSin v, double th, int N) {
  const double ph = meijer_angle_sin(v, th, N);
  return std::abs(1 / std::cos(th - ph)) / std::pow(std::cos(ph), meijer_sin_power(v, N));
}

inline double rotated_cos_factor(MeijerCos v, double th, int N) {
  const double ph = meijer_angle_cos(v, th, N);
  return std::abs(1 / std::sin(2 * (th - ph))) / std::pow(std::cos(ph), meijer_cos_power(v, N));
}

inline double stokes_root(int N, double c) { return std::sqrt(std::exp(1.0) / 3 * (2 * N + c)); }

inline void check_class_sector(FunctionKind base, SectorClass sc, double th) {
  const bool hankel = base == FunctionKind::H1;
  bool ok = false;
  switch (sc) {
    case SectorClass::Central:
      ok = hankel ? (th > -pi / 2 && th < 1.5 * pi) : std::abs(th) < pi / 2;
      break;
    case SectorClass::Rotated:
      ok = hankel ? ((th > -pi && th < 0) || (th > pi && th < 2 * pi)) : (std::abs(th) > pi / 4 && std::abs(th) < pi);
      break;
    case SectorClass::NearStokes:
      ok = hankel ? ((th > pi && th <= 1.5 * pi) || (th >= -pi / 2 && th < 0))
                  : (std::abs(th) > pi / 4 && std::abs(th) <= pi / 2);
      break;
  }
  if (!ok)
    throw SectorViolation("theta = " + std::to_string(th) + " outside the " + sector_class_name(sc) +
                          " sector for this kind");
}

}  // namespace detail

// Bound on |R_N(nu)| for the given kind and sector class.
inline double bound(const BoundSpec& spec, const SheetedComplex& nu) {
  if (std::abs(spec.theta - nu.theta) > 1e-12) throw std::invalid_argument("bound: spec.theta differs from arg nu");
  const FunctionKind kind = spec.kind;
  const int N = spec.N;
  if (N < 0) throw std::domain_error("bound: N must be non-negative");
  if (is_derivative(kind) && N < 1) throw TooSmallN("derivative bounds need N >= 1");
  // the second Hankel remainders are those of the first at nu e^{pi i}
  if (kind == FunctionKind::H2 || kind == FunctionKind::H2p) {
    BoundSpec s = spec;
    s.kind = kind == FunctionKind::H2 ? FunctionKind::H1 : FunctionKind::H1p;
    s.theta += pi;
    return bound(s, nu.rotate(pi));
  }
  const double th = nu.theta, a = nu.r;
  const SectorClass sc = spec.sector_class;
  detail::check_class_sector(base_kind(kind), sc, th);
  if (sc == SectorClass::NearStokes && kind != FunctionKind::H1 && kind != FunctionKind::H1p && N < 4)
    throw TooSmallN("near-Stokes Bessel bounds need N >= 4");
  if (sc == SectorClass::NearStokes && kind == FunctionKind::H1 && spec.residue() == 0 && N != 0 && N < 3)
    throw TooSmallN("near-Stokes bound needs N >= 3 or N = 0");
  auto T = [&](int k) { return detail::omitted_term(kind, k, a); };
  auto rs = [&](MeijerSin v) { return detail::rotated_sin_factor(v, th, N); };
  auto rc = [&](MeijerCos v) { return detail::rotated_cos_factor(v, th, N); };
  auto sq = [&](double c) { return detail::stokes_root(N, c); };
  const int r = spec.residue();
  const int k0 = 2 * N, k1 = 2 * N + 2, k2 = 2 * N + 4;  // B indices
  const int d0 = 2 * N + 1, d1 = 2 * N + 3, d2 = 2 * N + 5;  // D indices
  // csc factor, or 0 for the term that only enters off the central cone
  const double fcsc = base_kind(kind) == FunctionKind::H1 ? 0 : (sc == SectorClass::Central ? sector_factor_csc(th) : 0);
  const double fcsc0 = std::abs(th) > pi / 4 ? fcsc : 0.0;

  switch (kind) {
    case FunctionKind::H1:
      switch (sc) {
        case SectorClass::Central: {
          const double f = sector_factor_sec(th);
          if (r == 0) return (T(k0) + T(k1)) * f;
          if (r == 1) return T(k1) * f;
          return T(k0) * f;
        }
        case SectorClass::Rotated:
          if (r == 0) return rs(MeijerSin::Eq30) * T(k0) + rs(MeijerSin::Eq26) * T(k1);
          if (r == 1) return rs(MeijerSin::Eq26) * T(k1);
          return rs(MeijerSin::Eq30) * T(k0);
        case SectorClass::NearStokes:
          if (r == 0) return sq(N == 0 ? 4.5 : 2.5) * T(k0) + sq(4.5) * T(k1);
          if (r == 1) return sq(4.5) * T(k1);
          return sq(2.5) * T(k0);
      }
      break;
    case FunctionKind::H1p:
      switch (sc) {
        case SectorClass::Central: {
          const double f = sector_factor_sec(th);
          if (r == 0) return T(d0) * f;
          if (r == 1) return (T(d0) + T(d1)) * f;
          return T(d1) * f;
        }
        case SectorClass::Rotated:
          if (r == 0) return rs(MeijerSin::HpLow) * T(d0);
          if (r == 1) return rs(MeijerSin::HpLow) * T(d0) + rs(MeijerSin::HpHigh) * T(d1);
          return rs(MeijerSin::HpHigh) * T(d1);
        case SectorClass::NearStokes:
          if (r == 0) return sq(3.5) * T(d0);
          if (r == 1) return sq(3.5) * T(d0) + sq(5.5) * T(d1);
          return sq(5.5) * T(d1);
      }
      break;
    case FunctionKind::J:
      switch (sc) {
        case SectorClass::Central:
          if (r == 0) return T(k0) * fcsc + T(k2) * fcsc0;
          if (r == 1) return (T(k1) + T(k2)) * fcsc;
          return (T(k0) + T(k1)) * fcsc;
        case SectorClass::Rotated:
          if (r == 0) return rc(MeijerCos::J1) * T(k0) + rc(MeijerCos::J3) * T(k2);
          if (r == 1) return rc(MeijerCos::J2) * T(k1) + rc(MeijerCos::J3) * T(k2);
          return rc(MeijerCos::J1) * T(k0) + rc(MeijerCos::J2) * T(k1);
        case SectorClass::NearStokes:
          if (r == 0) return 0.5 * (sq(5.5) * T(k0) + sq(9.5) * T(k2));
          if (r == 1) return 0.5 * (sq(7.5) * T(k1) + sq(9.5) * T(k2));
          return 0.5 * (sq(5.5) * T(k0) + sq(7.5) * T(k1));
      }
      break;
    case FunctionKind::Y:
      switch (sc) {
        case SectorClass::Central:
          if (r == 0) return (T(k0) + T(k2)) * fcsc;
          if (r == 1) return T(k1) * fcsc;
          return T(k0) * fcsc;
        case SectorClass::Rotated:
          if (r == 0) return rc(MeijerCos::J1) * T(k0) + rc(MeijerCos::J3) * T(k2);
          if (r == 1) return rc(MeijerCos::J2) * T(k1);
          return rc(MeijerCos::J1) * T(k0);
        case SectorClass::NearStokes:
          if (r == 0) return 0.5 * (sq(5.5) * T(k0) + sq(9.5) * T(k2));
          if (r == 1) return 0.5 * sq(7.5) * T(k1);
          return 0.5 * sq(5.5) * T(k0);
      }
      break;
    case FunctionKind::Jp:
      switch (sc) {
        case SectorClass::Central:
          if (r == 0) return (T(d0) + T(d1)) * fcsc;
          if (r == 1) return T(d0) * fcsc + T(d2) * fcsc0;
          return (T(d1) + T(d2)) * fcsc;
        case SectorClass::Rotated:
          if (r == 0) return rc(MeijerCos::Jp1) * T(d0) + rc(MeijerCos::Jp2) * T(d1);
          if (r == 1) return rc(MeijerCos::Jp1) * T(d0) + rc(MeijerCos::Jp3) * T(d2);
          return rc(MeijerCos::Jp2) * T(d1) + rc(MeijerCos::Jp3) * T(d2);
        case SectorClass::NearStokes:
          if (r == 0) return 0.5 * (sq(6.5) * T(d0) + sq(8.5) * T(d1));
          if (r == 1) return 0.5 * (sq(6.5) * T(d0) + sq(10.5) * T(d2));
          return 0.5 * (sq(8.5) * T(d1) + sq(10.5) * T(d2));
      }
      break;
    case FunctionKind::Yp:
      switch (sc) {
        case SectorClass::Central:
          if (r == 0) return T(d0) * fcsc;
          if (r == 1) return (T(d0) + T(d2)) * fcsc;
          return T(d1) * fcsc;
        case SectorClass::Rotated:
          if (r == 0) return rc(MeijerCos::Jp1) * T(d0);
          if (r == 1) return rc(MeijerCos::Jp1) * T(d0) + rc(MeijerCos::Jp3) * T(d2);
          return rc(MeijerCos::Jp2) * T(d1);
        case SectorClass::NearStokes:
          if (r == 0) return 0.5 * sq(6.5) * T(d0);
          if (r == 1) return 0.5 * (sq(6.5) * T(d0) + sq(10.5) * T(d2));
          return 0.5 * sq(8.5) * T(d1);
      }
      break;
    case FunctionKind::H2:
    case FunctionKind::H2p:
      break;  // handled above
  }
  throw std::logic_error("bound: unreachable");
}

inline double bound_near_stokes(FunctionKind kind, const SheetedComplex& nu, int N) {
  return bound(BoundSpec{kind, N, SectorClass::NearStokes, nu.theta}, nu);
}

// Sign and size checks at positive order -------------------------------------

struct SignCheck {
  int N;
  FunctionKind kind;
  double signed_remainder;  // the remainder times the sign the mean-value form fixes
  double lower, upper;      // the open interval the mean-value form puts it in
  bool ok;
};

struct WatsonReport {
  double nu;
  double jp, jp_leading;  // J'_nu(nu) and its leading term
  double yp, yp_leading;
  double r1_jp;           // R_1^{(J')}(nu)
  bool jp_below, yp_above, r1_jp_negative;
  std::vector<SignCheck> sign_checks;
  bool all_ok() const {
    bool ok = jp_below && yp_above && r1_jp_negative;
    for (const auto& s : sign_checks) ok = ok && s.ok;
    return ok;
  }
};

// J'_nu(nu) and Y'_nu(nu) from the real Schlafli integrals.
inline std::pair<double, double> bessel_JY_prime_real(double nu, double x, const QuadratureConfig& cfg = {}) {
  auto lo = bessel_JY_real(nu - 1, x, cfg), hi = bessel_JY_real(nu + 1, x, cfg);
  return {0.5 * (lo.first - hi.first), 0.5 * (lo.second - hi.second)};
}

inline WatsonReport watson_inequalities(double nu, const QuadratureConfig& cfg = {}, int Nmax = 6) {
  if (!(nu > 0)) throw std::domain_error("watson_inequalities: nu must be positive");
  WatsonReport rep{};
  rep.nu = nu;
  auto [jp, yp] = bessel_JY_prime_real(nu, nu, cfg);
  const double g23 = static_cast<double>(gamma_two_thirds());
  rep.jp = jp;
  rep.yp = yp;
  rep.jp_leading = std::pow(3.0, 1.0 / 6) * g23 / (std::cbrt(2.0) * pi * std::pow(nu, 2.0 / 3));
  rep.yp_leading = std::pow(3.0, 2.0 / 3) * g23 / (std::cbrt(2.0) * pi * std::pow(nu, 2.0 / 3));
  rep.jp_below = jp < rep.jp_leading;
  rep.yp_above = yp > rep.yp_leading;
  const SheetedComplex v(nu, 0);
  auto rem = [&](FunctionKind k, double f, int N) { return f - partial_sum_equal_order(k, v, N).real(); };
  rep.r1_jp = rem(FunctionKind::Jp, jp, 1);
  rep.r1_jp_negative = rep.r1_jp < 0;
  for (int N = 1; N <= Nmax; ++N) {
    auto T = [&](FunctionKind k, int idx) { return detail::omitted_term(k, idx, nu); };
    const double s = (N % 2) ? -1.0 : 1.0;  // (-1)^N
    const int d0 = 2 * N + 1, d1 = 2 * N + 3, d2 = 2 * N + 5;
    {
      const FunctionKind k = FunctionKind::Jp;
      const double R = rem(k, jp, N);
      SignCheck c{N, k, 0, 0, 0, false};
      switch (N % 3) {
        case 0: c.signed_remainder = -s * R, c.lower = 0, c.upper = T(k, d0) + T(k, d1); break;
        case 1: c.signed_remainder = s * R, c.lower = -T(k, d2), c.upper = T(k, d0); break;
        default: c.signed_remainder = s * R, c.lower = 0, c.upper = T(k, d1) + T(k, d2); break;
      }
      c.ok = c.signed_remainder > c.lower && c.signed_remainder < c.upper;
      rep.sign_checks.push_back(c);
    }
    {
      const FunctionKind k = FunctionKind::Yp;
      const double R = rem(k, yp, N);
      SignCheck c{N, k, 0, 0, 0, false};
      switch (N % 3) {
        case 0: c.signed_remainder = -s * R, c.lower = -T(k, d1), c.upper = T(k, d0); break;
        case 1: c.signed_remainder = -s * R, c.lower = 0, c.upper = T(k, d0) + T(k, d2); break;
        default: c.signed_remainder = s * R, c.lower = -T(k, d2), c.upper = T(k, d1); break;
      }
      c.ok = c.signed_remainder > c.lower && c.signed_remainder < c.upper;
      rep.sign_checks.push_back(c);
    }
  }
  return rep;
}

}  // namespace nde
