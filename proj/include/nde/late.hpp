#pragma once

// Large-n behaviour of the coefficients: the inverse factorial expansion,
// its optimal truncation, and the classical one- and two-term formulas.

#include "nde/common.hpp"
#include "nde/exact.hpp"

#include <boost/math/constants/constants.hpp>

#include <string>
#include <vector>

namespace nde {

namespace detail {

inline Real50 pi_r50() { return boost::math::constants::pi<Real50>(); }

inline Complex50 to_c50(const GaussRational& k) { return {to_real<Real50>(k.re), to_real<Real50>(k.im)}; }

inline Complex50 coeff_value50(CoeffKind ck, int m, const GaussRational& kappa) {
  return eval_float50(ck == CoeffKind::B ? coeff_B(m) : coeff_D(m), to_c50(kappa));
}

}  // namespace detail

struct LateApprox {
  int n = 0;
  GaussRational kappa;
  int M = 0;
  Complex50 value;  // approximation to C_n(kappa)
  int truncation_index() const { return M; }
};

// Gamma((n - m)/3) / Gamma((n + 1)/3)
inline Real50 gamma_ratio_third(int n, int m) { return gamma_third50(n - m) / gamma_third50(n + 1); }

// M-term inverse factorial approximation to B_n(kappa) (or D_n with ck = D).
inline LateApprox inverse_factorial_approx(int n, const GaussRational& kappa, int M, CoeffKind ck = CoeffKind::B) {
  if (n < 1) throw std::invalid_argument("inverse_factorial_approx: n must be >= 1");
  if (M < 0 || M > n - 1) throw std::invalid_argument("inverse_factorial_approx: need 0 <= M <= n-1");
  const Real50 re = to_real<Real50>(kappa.re);
  if (!(abs(re) < Real50(M + 1) / 3)) throw std::domain_error("inverse_factorial_approx: need |Re kappa| < (M+1)/3");
  const Real50 P = detail::pi_r50();
  const Real50 tp = cbrt(12 * P);  // (12 pi)^{1/3}
  const Complex50 k = detail::to_c50(kappa);
  Complex50 sum(0);
  for (int m = 0; m < M; ++m) {
    double s = sin_third_pi(m + 1);
    if (s == 0) continue;
    Real50 sm = (m % 6 == 0 || m % 6 == 1) ? sqrt(Real50(3)) / 2 : -sqrt(Real50(3)) / 2;
    // (12 pi)^{(m-n)/3} Gamma((m+1)/3) Gamma((n-m)/3)/Gamma((n+1)/3)
    Real50 w = pow(tp, m - n) * gamma_third50(m + 1) * gamma_ratio_third(n, m) * sm;
    Complex50 arg = 2 * P * k - P / 2 * (n + m);
    sum += w * detail::coeff_value50(ck, m, kappa) * cos(arg);
  }
  return {n, kappa, M, sum * (2 / (3 * P))};
}

struct Table1Row {
  int n;
  GaussRational kappa;
  int M;
  Real50 exact;   // Gamma((n+1)/3) |B_n(kappa)|
  Real50 approx;  // same with the M-term approximation
  Real50 error() const { return exact - approx; }
};

// Gamma((n+1)/3)|B_n(kappa)| from the exact norm.
inline Real50 scaled_abs_exact(int n, const GaussRational& kappa) {
  GaussRational b = eval_exact(coeff_B(n), kappa);
  return sqrt(to_real<Real50>(b.norm())) * gamma_third50(n + 1);
}

inline Table1Row late_row(int n, const GaussRational& kappa, int M) {
  LateApprox a = inverse_factorial_approx(n, kappa, M);
  return {n, kappa, M, scaled_abs_exact(n, kappa), abs(a.value) * gamma_third50(n + 1)};
}

inline std::vector<Table1Row> table1_reproduce() {
  return {late_row(100, GaussRational(3), 50), late_row(100, GaussRational(2, 2), 50),
          late_row(200, GaussRational(5), 100), late_row(200, GaussRational(4, 3), 100)};
}

// Two leading terms of the inverse factorial series in closed form.
inline Complex50 two_term_late(int n, const GaussRational& kappa) {
  if (n < 2) throw std::invalid_argument("two_term_late: n must be >= 2");
  const Real50 P = detail::pi_r50();
  const Complex50 k = detail::to_c50(kappa);
  const Real50 h = Real50(n) / 2 + Real50(1) / 3;
  const Real50 tp = 12 * P;
  const Complex50 arg = 2 * P * k - P / 2 * n;
  Real50 a = pow(Real50(2) / 3, Real50(2) / 3) / (gamma_two_thirds() * cbrt(h) * pow(tp, Real50(n) / 3));
  Real50 b = cbrt(Real50(2) / 3) / (gamma_one_third() * pow(h, Real50(2) / 3) * pow(tp, Real50(n - 1) / 3));
  return a * cos(arg) + b * k * sin(arg);
}

// Approximation to B_{2n}(0).
inline Real50 watson_late(int n) {
  if (n < 1) throw std::invalid_argument("watson_late: n must be >= 1");
  const Real50 P = detail::pi_r50();
  Real50 v = pow(Real50(2) / 3, Real50(2) / 3) /
             (gamma_two_thirds() * cbrt(Real50(n) + Real50(1) / 3) * pow(12 * P, Real50(2 * n) / 3));
  return (n % 2) ? Real50(-v) : v;
}

// 6^{1/3} Gamma(5/3) / (4 Gamma(1/3))
inline Real50 dingle_beta() { return cbrt(Real50(6)) * gamma_third50(5) / (4 * gamma_one_third()); }

struct DingleReport {
  int n;
  Real50 lhs;        // -(6^{(2n+1)/3}/4) Gamma((2n+2)/3)/Gamma(1/3) D_{2n+1}(0)
  Real50 one_term;   // leading term of the late-coefficient expansion
  Real50 three_term; // with the two printed corrections
  Real50 ratio() const { return lhs / one_term; }
  Real50 ratio3() const { return lhs / three_term; }
};

inline DingleReport dingle_check(int n) {
  if (n < 2) throw std::invalid_argument("dingle_check: n must be >= 2");
  const Real50 P = detail::pi_r50();
  const int q = 2 * n + 1;  // the index, counted in thirds below
  Rational d = eval_exact(coeff_D(q), Rational(0));
  Real50 lhs = -pow(Real50(6), Real50(q) / 3) / 4 * gamma_third50(2 * n + 2) / gamma_one_third() * to_real<Real50>(d);
  const Real50 beta = dingle_beta();
  Real50 pre = cbrt(16 / (P * P)) * beta * sqrt(Real50(3)) / pow(2 * P, Real50(q) / 3);
  if (n % 2) pre = -pre;
  // Gamma(q/3 - j/3) = Gamma((q - j)/3)
  Real50 g1 = gamma_third50(q - 1), g3 = gamma_third50(q - 3), g7 = gamma_third50(q - 7);
  Real50 three = g1 + pow(2 * P, Real50(2) / 3) / (30 * beta) * g3 - 46 * P * P / 1575 * g7;
  return {n, lhs, pre * g1, pre * three};
}

// Error of the M-term approximation for each M in [Mlo, Mhi]; returns the
// minimising M.
struct OptimalM {
  int M = 0;
  Real50 error;
  std::vector<std::pair<int, Real50>> curve;
};

inline OptimalM optimal_truncation_scan(int n, const GaussRational& kappa, int Mlo, int Mhi) {
  const Complex50 ex = detail::to_c50(eval_exact(coeff_B(n), kappa));
  OptimalM r;
  for (int M = Mlo; M <= Mhi; ++M) {
    Real50 e = abs(ex - inverse_factorial_approx(n, kappa, M).value);
    r.curve.emplace_back(M, e);
    if (r.curve.size() == 1 || e < r.error) {
      r.M = M;
      r.error = e;
    }
  }
  return r;
}

// Significant digits to which a and b agree.
inline double agreeing_digits(const Real50& a, const Real50& b) {
  if (a == b) return 50;
  Real50 m = std::max(abs(a), abs(b));
  return static_cast<double>(-log10(abs(a - b) / m));
}

}  // namespace nde
