#pragma once

// Truncated expansions of the eight kinds for order close to argument, and
// the half-turn continuation relations.

#include "nde/common.hpp"
#include "nde/oracles.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace nde {

// 6^{(n+1)/3} Gamma((n+1)/3) C_n(kappa), C = B or D, rounded from 50 digits.
inline cplx scaled_coeff(CoeffKind kind, int n, cplx kappa) {
  using Key = std::tuple<int, int, double, double>;
  static std::mutex mu;
  static std::map<Key, cplx> cache;
  Key key{int(kind), n, kappa.real(), kappa.imag()};
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  CoeffPolynomial p = kind == CoeffKind::B ? coeff_B(n) : coeff_D(n);
  Complex50 c = eval_float50(p, Complex50(Real50(kappa.real()), Real50(kappa.imag())));
  Real50 s = pow(Real50(6), Real50(n + 1) / 3) * gamma_third50(n + 1);
  c *= s;
  cplx v(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(key, v);
  return v;
}

// Kind-dependent factor in front of 6^{(n+1)/3} C_n Gamma((n+1)/3) z^{-(n+1)/3}.
inline cplx term_factor(FunctionKind kind, int n) {
  const double s = sin_third_pi(n + 1);
  switch (base_kind(kind)) {
    case FunctionKind::H1: return -2 / (3 * pi) * exp_i_third_pi(2 * (n + 1)) * s;
    case FunctionKind::H2: return -2 / (3 * pi) * exp_i_third_pi(-2 * (n + 1)) * s;
    case FunctionKind::J: return 1 / (3 * pi) * s;
    case FunctionKind::Y: return -2 / (3 * pi) * ((n % 2) ? -1.0 : 1.0) * s * s;
    default: break;
  }
  throw std::logic_error("term_factor: unreachable");
}

// The n-th term of the expansion of `kind`.
inline cplx series_term(FunctionKind kind, const SheetedComplex& z, cplx kappa, int n) {
  cplx f = term_factor(kind, n);
  if (f == 0.0) return 0;
  CoeffKind ck = is_derivative(kind) ? CoeffKind::D : CoeffKind::B;
  return f * scaled_coeff(ck, n, kappa) * z.pow(-(n + 1) / 3.0);
}

// Sum of the terms n < N (derivative kinds start at n = 1; D_0 vanishes).
inline cplx partial_sum(FunctionKind kind, const SheetedComplex& z, cplx kappa, int N) {
  if (N < 0) throw std::invalid_argument("partial_sum: N must be non-negative");
  cplx s = 0;
  for (int n = is_derivative(kind) ? 1 : 0; n < N; ++n) s += series_term(kind, z, kappa, n);
  return s;
}

// kappa = 0: only even B and odd D survive, so N counts surviving terms.
inline cplx partial_sum_equal_order(FunctionKind kind, const SheetedComplex& nu, int N) {
  if (N < 0) throw std::invalid_argument("partial_sum_equal_order: N must be non-negative");
  return partial_sum(kind, nu, 0.0, is_derivative(kind) ? 2 * N + 1 : 2 * N);
}

inline void require_noninteger_order(cplx nu) {
  if (nu.imag() == 0 && std::abs(nu.real() - std::round(nu.real())) < 1e-12)
    throw IntegerOrder("continuation at integer order needs limiting values");
}

// H1 or H2 at z e^{2 pi i m} from the pair (h1, h2) at z.
inline cplx continue_hankel(FunctionKind kind, long m, cplx nu, cplx h1, cplx h2) {
  require_noninteger_order(nu);
  const cplx x = pi * nu, ip(0, pi);
  const int k = static_cast<int>(m);
  if (kind == FunctionKind::H1) return -sin_ratio(2 * k - 1, x) * h1 - std::exp(-ip * nu) * sin_ratio(2 * k, x) * h2;
  if (kind == FunctionKind::H2) return sin_ratio(2 * k + 1, x) * h2 + std::exp(ip * nu) * sin_ratio(2 * k, x) * h1;
  throw std::invalid_argument("continue_hankel: kind must be H1 or H2");
}

struct BesselPair {
  cplx J, Y;
};

enum class Rotation { Even, Odd };  // z e^{2 pi i m} or z e^{(2m+1) pi i}

// Even: (J_nu, Y_nu) at z e^{2 pi i m}. Odd: (J_{-nu}, Y_{-nu}) at z e^{(2m+1) pi i},
// i.e. the order rotates with the argument. Input is (J_nu, Y_nu) at z.
inline BesselPair continue_bessel(long m, Rotation rot, cplx nu, BesselPair v) {
  require_noninteger_order(nu);
  const cplx x = pi * nu, i(0, 1);
  const cplx h1 = v.J + i * v.Y, h2 = v.J - i * v.Y;
  const int k = static_cast<int>(m);
  const cplx e2m = std::exp(2.0 * pi * i * double(k) * nu);
  const cplx s2m = std::sin(2.0 * double(k) * x);
  if (rot == Rotation::Even) {
    cplx J = e2m * v.J;
    cplx Y = 1.0 / e2m * v.Y + 2.0 * i * sin_ratio(2 * k, x) * std::cos(x) * v.J;
    return {J, Y};
  }
  const cplx emi = std::exp(-pi * i * nu);
  const cplx s2m1 = std::sin(double(2 * k + 1) * x);
  cplx J = e2m * v.J - i * s2m * h1 - i * emi * s2m1 * h2;
  cplx Y = std::exp(-2.0 * double(k + 1) * pi * i * nu) * v.Y +
           2.0 * i * emi * sin_ratio(2 * k + 1, x) * std::cos(x) * v.J - s2m * h1 - emi * s2m1 * h2;
  return {J, Y};
}

}  // namespace nde
