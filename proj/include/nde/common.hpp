#pragma once

#include "nde/exact.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace nde {

using cplx = std::complex<double>;
constexpr double pi = 3.14159265358979323846264338327950288;

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SectorViolation : std::domain_error {
  using std::domain_error::domain_error;
};
struct IntegerOrder : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoBracket : std::domain_error {
  using std::domain_error::domain_error;
};
struct TooSmallN : std::domain_error {
  using std::domain_error::domain_error;
};

// A point on the logarithmic Riemann surface: modulus and unreduced angle.
struct SheetedComplex {
  double r = 1;
  double theta = 0;

  SheetedComplex() = default;
  SheetedComplex(double r_, double th) : r(r_), theta(th) {
    if (!(r_ > 0)) throw std::domain_error("SheetedComplex: modulus must be positive");
  }
  static SheetedComplex principal(cplx z) { return {std::abs(z), std::arg(z)}; }

  cplx value() const { return std::polar(r, theta); }
  // z^s on this sheet
  cplx pow(cplx s) const { return std::exp(s * cplx(std::log(r), theta)); }
  cplx pow(double s) const { return std::polar(std::pow(r, s), s * theta); }
  SheetedComplex rotate(double phi) const { return {r, theta + phi}; }
  SheetedComplex scale(double k) const { return {r * k, theta}; }
  SheetedComplex conj() const { return {r, -theta}; }
};

enum class FunctionKind { H1, H2, J, Y, H1p, H2p, Jp, Yp };

inline bool is_derivative(FunctionKind k) {
  return k == FunctionKind::H1p || k == FunctionKind::H2p || k == FunctionKind::Jp || k == FunctionKind::Yp;
}

inline FunctionKind base_kind(FunctionKind k) {
  switch (k) {
    case FunctionKind::H1p: return FunctionKind::H1;
    case FunctionKind::H2p: return FunctionKind::H2;
    case FunctionKind::Jp: return FunctionKind::J;
    case FunctionKind::Yp: return FunctionKind::Y;
    default: return k;
  }
}

inline std::string kind_name(FunctionKind k) {
  switch (k) {
    case FunctionKind::H1: return "H1";
    case FunctionKind::H2: return "H2";
    case FunctionKind::J: return "J";
    case FunctionKind::Y: return "Y";
    case FunctionKind::H1p: return "H1p";
    case FunctionKind::H2p: return "H2p";
    case FunctionKind::Jp: return "Jp";
    case FunctionKind::Yp: return "Yp";
  }
  return "?";
}

inline FunctionKind parse_kind(const std::string& s) {
  for (auto k : {FunctionKind::H1, FunctionKind::H2, FunctionKind::J, FunctionKind::Y, FunctionKind::H1p,
                 FunctionKind::H2p, FunctionKind::Jp, FunctionKind::Yp})
    if (kind_name(k) == s) return k;
  throw std::invalid_argument("unknown function kind: " + s);
}

// Gamma(1/3), Gamma(2/3) to 50 digits.
inline const Real50& gamma_one_third() {
  static const Real50 g("2.6789385347077476336556929409746776441286893779573");
  return g;
}
inline const Real50& gamma_two_thirds() {
  static const Real50 g("1.3541179394264004169452880281545137855193272660568");
  return g;
}

// Gamma(n/3) for n >= 1 by upward recurrence from the stored constants;
// integer arguments use the exact factorial.
inline Real50 gamma_third50(int n) {
  if (n < 1) throw std::domain_error("gamma_third: n must be positive");
  int r = n % 3;
  if (r == 0) return to_real<Real50>(factorial_q(n / 3 - 1));
  Real50 g = (r == 1) ? gamma_one_third() : gamma_two_thirds();
  for (int m = r; m + 3 <= n; m += 3) g *= Real50(m) / 3;
  return g;
}

inline double gamma_third(int n) { return static_cast<double>(gamma_third50(n)); }

// sin((n+1) pi / 3) without rounding noise
inline double sin_third_pi(int n1) {
  static const double s = std::sqrt(3.0) / 2;
  switch (((n1 % 6) + 6) % 6) {
    case 1: case 2: return s;
    case 4: case 5: return -s;
    default: return 0;
  }
}

// e^{i k pi / 3}, exact table
inline cplx exp_i_third_pi(int k) {
  static const double s = std::sqrt(3.0) / 2;
  switch (((k % 6) + 6) % 6) {
    case 0: return {1, 0};
    case 1: return {0.5, s};
    case 2: return {-0.5, s};
    case 3: return {-1, 0};
    case 4: return {-0.5, -s};
    default: return {0.5, -s};
  }
}

inline double rel_diff(cplx a, cplx b) {
  double m = std::max(std::abs(a), std::abs(b));
  return m == 0 ? 0 : std::abs(a - b) / m;
}

}  // namespace nde
