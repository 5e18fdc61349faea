#pragma once

// Exact rational machinery for the Nicholson-Debye coefficients B_n(k), D_n(k).

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nde {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(long r) : re(r) {}

  GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    Rational d = o.re * o.re + o.im * o.im;
    if (d == 0) throw std::domain_error("GaussRational: division by zero");
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  // |x|^2, exact
  Rational norm() const { return re * re + im * im; }
};

// Exact conversion of a binary floating value.
inline Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("exact_from_double: non-finite");
  int e = 0;
  double m = std::frexp(x, &e);
  // 53-bit mantissa scaled to an integer
  long long mi = static_cast<long long>(std::ldexp(m, 53));
  Rational r{Integer(mi)};
  e -= 53;
  Integer p = Integer(1) << std::abs(e);
  if (e >= 0) r *= Rational(p);
  else r /= Rational(p);
  return r;
}

inline GaussRational exact_from_complex(std::complex<double> z) {
  return {exact_from_double(z.real()), exact_from_double(z.imag())};
}

// "3", "-1/2", "0.25", "1e-3" as an exact rational (decimals are read exactly).
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.find('/') != std::string::npos) return Rational(s);
  std::size_t epos = s.find_first_of("eE");
  std::string mant = s.substr(0, epos);
  long ex = 0;
  if (epos != std::string::npos) {
    std::size_t used = 0;
    ex = std::stol(s.substr(epos + 1), &used);
    if (used != s.size() - epos - 1) throw std::invalid_argument("bad number: " + s);
  }
  std::size_t dot = mant.find('.');
  if (dot != std::string::npos) {
    ex -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (mant.empty() || mant == "+" || mant == "-") throw std::invalid_argument("bad number: " + s);
  for (std::size_t i = 0; i < mant.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(mant[i])) && !(i == 0 && (mant[i] == '-' || mant[i] == '+')))
      throw std::invalid_argument("bad number: " + s);
  if (mant[0] == '+') mant.erase(0, 1);
  Rational r{Integer(mant)};
  Integer p = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::abs(ex)));
  return ex >= 0 ? r * Rational(p) : r / Rational(p);
}

// "a", "bi", "a+bi", "a-bi" with rational or decimal parts; "i" alone is 1i.
inline GaussRational parse_gauss_rational(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i') return {parse_rational(s), Rational(0)};
  s.pop_back();
  // split at the last sign that is not part of an exponent
  std::size_t cut = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      cut = i;
      break;
    }
  std::string re = cut == std::string::npos ? "" : s.substr(0, cut);
  std::string im = cut == std::string::npos ? s : s.substr(cut);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? Rational(0) : parse_rational(re), parse_rational(im)};
}

enum class CoeffKind { B, D };

// B_n or D_n as a polynomial in k; c[j] multiplies k^j.
struct CoeffPolynomial {
  int n = 0;
  CoeffKind kind = CoeffKind::B;
  std::vector<Rational> c;

  friend bool operator==(const CoeffPolynomial& a, const CoeffPolynomial& b) {
    return a.n == b.n && a.kind == b.kind && a.c == b.c;
  }
  int degree() const {
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j)
      if (c[j] != 0) return j;
    return -1;
  }
};

inline Rational factorial_q(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

// Generalised binomial rho choose i as an exact rational product.
inline Rational binom_q(const Rational& rho, int i) {
  Rational r = 1;
  for (int m = 0; m < i; ++m) r *= (rho - m);
  return r / factorial_q(i);
}

// Rising factorial (x)_m.
inline Rational rising_q(const Rational& x, int m) {
  Rational r = 1;
  for (int j = 0; j < m; ++j) r *= (x + j);
  return r;
}

// sinh t - t = sum_j a_j t^{j+3}
inline std::vector<Rational> sinh_series(int jmax) {
  if (jmax < 0) throw std::invalid_argument("sinh_series: jmax < 0");
  std::vector<Rational> a(jmax + 1, Rational(0));
  for (int j = 0; j <= jmax; j += 2) a[j] = Rational(1) / factorial_q(j + 3);
  return a;
}

// Memo tables shared by all coefficient routes. Growth is serialised by a
// mutex; values are copied out so callers never hold references into them.
class PolyTables {
 public:
  static PolyTables& instance() {
    static PolyTables t;
    return t;
  }

  Rational a(int j) {
    std::lock_guard<std::mutex> lk(mu_);
    grow_a(j);
    return a_[j];
  }

  // B_{j,i}: coefficient of t^j in (sum_{m>=1} a_m t^m)^i
  Rational bell(int j, int i) {
    if (i < 0 || j < 0 || i > j) throw std::invalid_argument("bell: need 0 <= i <= j");
    std::lock_guard<std::mutex> lk(mu_);
    grow_bell(j);
    return bell_[j][i];
  }

  // A_{i,j} for a non-negative integer parameter i
  Rational potential_int(int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("potential_int: negative index");
    std::lock_guard<std::mutex> lk(mu_);
    grow_pint(i, j);
    return pint_[i][j];
  }

  // sum_i C(rho,i) a_0^{-i} B_{j,i}; held under one lock for speed
  Rational potential(const Rational& rho, int j) {
    if (j < 0) throw std::invalid_argument("potential: j < 0");
    std::lock_guard<std::mutex> lk(mu_);
    grow_bell(j);
    Rational s = 0, c = 1, six_i = 1;
    for (int i = 0; i <= j; ++i) {
      if (i > 0) {
        c *= (rho - (i - 1));
        c /= i;
        six_i *= 6;
      }
      if (bell_[j][i] != 0) s += c * six_i * bell_[j][i];
    }
    return s;
  }

 private:
  void grow_a(int j) {
    if (static_cast<int>(a_.size()) > j) return;
    a_ = sinh_series(std::max(j, 2 * static_cast<int>(a_.size()) + 8));
  }

  void grow_bell(int j) {
    int have = static_cast<int>(bell_.size());
    if (have > j) return;
    grow_a(j + 1);
    for (int k = have; k <= j; ++k) {
      std::vector<Rational> row(k + 1, Rational(0));
      if (k == 0) row[0] = 1;
      for (int i = 1; i <= k; ++i) {
        if (2 * i > k) break;  // a_1 = 0 so the lowest degree of the i-th power is 2i
        Rational s = 0;
        for (int m = 1; m <= k - i + 1; ++m) {
          if (a_[m] == 0) continue;
          const Rational& b = bell_[k - m][i - 1];
          if (b != 0) s += a_[m] * b;
        }
        row[i] = std::move(s);
      }
      bell_.push_back(std::move(row));
    }
  }

  void grow_pint(int i, int j) {
    grow_a(j + 1);
    int cols = std::max(j + 1, pint_.empty() ? 0 : static_cast<int>(pint_[0].size()));
    // widen existing rows if needed
    if (!pint_.empty() && static_cast<int>(pint_[0].size()) < cols) {
      std::vector<std::vector<Rational>> old;
      old.swap(pint_);
      for (std::size_t r = 0; r < old.size(); ++r) add_pint_row(cols);
    }
    while (static_cast<int>(pint_.size()) <= i) add_pint_row(cols);
  }

  void add_pint_row(int cols) {
    int r = static_cast<int>(pint_.size());
    std::vector<Rational> row(cols, Rational(0));
    if (r == 0) {
      row[0] = 1;
    } else {
      const auto& prev = pint_[r - 1];
      for (int k = 0; k < cols; ++k) {
        Rational s = 0;
        for (int m = 0; m <= k; ++m) {
          if (a_[m] == 0 || prev[k - m] == 0) continue;
          s += a_[m] * 6 * prev[k - m];  // a_m / a_0 with a_0 = 1/6
        }
        row[k] = std::move(s);
      }
    }
    pint_.push_back(std::move(row));
  }

  std::mutex mu_;
  std::vector<Rational> a_;
  std::vector<std::vector<Rational>> bell_;
  std::vector<std::vector<Rational>> pint_;
};

inline Rational bell(int j, int i) { return PolyTables::instance().bell(j, i); }

inline Rational potential(const Rational& rho, int j) {
  return PolyTables::instance().potential(rho, j);
}

// Comtet's reduction to integer-parameter potentials.
inline Rational potential_comtet(const Rational& rho, int j) {
  if (j < 0) throw std::invalid_argument("potential_comtet: j < 0");
  Rational mr = -rho;
  for (int i = 0; i <= j; ++i)
    if (mr + i == 0)
      throw std::domain_error("potential_comtet: rho is a non-negative integer <= j");
  auto& T = PolyTables::instance();
  Rational s = 0;
  Integer binom = 1;
  for (int i = 0; i <= j; ++i) {
    if (i > 0) binom = binom * (j - i + 1) / i;
    Rational term = Rational(binom) * T.potential_int(i, j) / (mr + i);
    if (i % 2) s -= term;
    else s += term;
  }
  return rising_q(mr, j + 1) / factorial_q(j) * s;
}

inline Rational third(int n) { return Rational(n, 3); }

// Airey's representation: c_{n-2k} = A_{-(n+1)/3, 2k} / (n-2k)!
inline CoeffPolynomial coeff_B_airey(int n) {
  if (n < 0) throw std::invalid_argument("coeff_B: n < 0");
  CoeffPolynomial p;
  p.n = n;
  p.kind = CoeffKind::B;
  p.c.assign(n + 1, Rational(0));
  Rational rho = -third(n + 1);
  for (int k = 0; 2 * k <= n; ++k) p.c[n - 2 * k] = potential(rho, 2 * k) / factorial_q(n - 2 * k);
  return p;
}

namespace detail {
struct CoeffMemo {
  std::mutex mu;
  std::map<int, CoeffPolynomial> b, d;
};
inline CoeffMemo& coeff_memo() {
  static CoeffMemo m;
  return m;
}
}  // namespace detail

// Memoised Airey route. This is the primary coefficient source.
inline CoeffPolynomial coeff_B(int n) {
  auto& m = detail::coeff_memo();
  {
    std::lock_guard<std::mutex> lk(m.mu);
    auto it = m.b.find(n);
    if (it != m.b.end()) return it->second;
  }
  CoeffPolynomial p = coeff_B_airey(n);
  std::lock_guard<std::mutex> lk(m.mu);
  m.b.emplace(n, p);
  return p;
}

// Seed the memo, e.g. from a disk cache. Only fills missing entries.
inline void seed_coeff(const CoeffPolynomial& p) {
  auto& m = detail::coeff_memo();
  std::lock_guard<std::mutex> lk(m.mu);
  (p.kind == CoeffKind::B ? m.b : m.d).emplace(p.n, p);
}

inline std::vector<int> memoised_orders(CoeffKind kind) {
  auto& m = detail::coeff_memo();
  std::lock_guard<std::mutex> lk(m.mu);
  std::vector<int> out;
  for (auto& [n, p] : (kind == CoeffKind::B ? m.b : m.d)) out.push_back(n);
  return out;
}

// Route through integer-parameter potentials with the Gamma ratio expanded
// as a rising product.
inline CoeffPolynomial coeff_B_comtet(int n) {
  if (n < 0) throw std::invalid_argument("coeff_B_comtet: n < 0");
  auto& T = PolyTables::instance();
  CoeffPolynomial p;
  p.n = n;
  p.c.assign(n + 1, Rational(0));
  Rational x = third(n + 1);
  for (int k = 0; 2 * k <= n; ++k) {
    int jj = 2 * k;
    Rational s = 0;
    Integer binom = 1;
    for (int j = 0; j <= jj; ++j) {
      if (j > 0) binom = binom * (jj - j + 1) / j;
      Rational term = Rational(binom) * T.potential_int(j, jj) / Rational(n + 3 * j + 1);
      if (j % 2) s -= term;
      else s += term;
    }
    // 3 Gamma(x + 2k + 1) / ((2k)! Gamma(x)) = 3 (x)_{2k+1} / (2k)!
    p.c[n - jj] = 3 * rising_q(x, jj + 1) / factorial_q(jj) * s / factorial_q(n - jj);
  }
  return p;
}

// Bivariate polynomial P_n(x, k): outer index is the power of x, inner the power of k.
using Bivariate = std::vector<std::vector<Rational>>;

// Laplace-integral recurrence. Returns P_0..P_n.
inline std::vector<Bivariate> lauwerier_polys(int n) {
  std::vector<Bivariate> P;
  auto a = sinh_series(n + 1);
  for (int m = 0; m <= n; ++m) {
    Bivariate q(1, std::vector<Rational>(m + 1, Rational(0)));
    q[0][m] = Rational(1) / factorial_q(m);
    for (int k = 1; 2 * k <= m && m >= 2; ++k) {
      const Bivariate& src = P[m - 2 * k];
      const Rational& w = a[2 * k];  // 1/(2k+3)!
      if (q.size() < src.size() + 1) q.resize(src.size() + 1, std::vector<Rational>(m + 1, Rational(0)));
      for (std::size_t xp = 0; xp < src.size(); ++xp)
        for (std::size_t kp = 0; kp < src[xp].size(); ++kp) {
          if (src[xp][kp] == 0) continue;
          q[xp + 1][kp] -= w * src[xp][kp] / Rational(static_cast<long>(xp + 1));
        }
    }
    P.push_back(std::move(q));
  }
  return P;
}

inline CoeffPolynomial coeff_B_lauwerier(int n) {
  if (n < 0) throw std::invalid_argument("coeff_B_lauwerier: n < 0");
  auto P = lauwerier_polys(n);
  const Bivariate& q = P[n];
  CoeffPolynomial p;
  p.n = n;
  p.c.assign(n + 1, Rational(0));
  Rational x = third(n + 1);
  Rational scale = 1;  // 6^m (x)_m
  for (std::size_t m = 0; m < q.size(); ++m) {
    if (m > 0) scale *= 6 * (x + static_cast<long>(m - 1));
    for (std::size_t kp = 0; kp < q[m].size() && kp <= static_cast<std::size_t>(n); ++kp)
      if (q[m][kp] != 0) p.c[kp] += q[m][kp] * scale;
  }
  return p;
}

// p(k + s) for an integer shift s.
inline std::vector<Rational> shift_poly(const std::vector<Rational>& c, long s) {
  std::vector<Rational> out(c.size(), Rational(0));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    // (k+s)^j = sum_i C(j,i) s^{j-i} k^i
    Integer binom = 1, spow = 1;
    std::vector<Integer> sp(j + 1);
    for (std::size_t e = 0; e <= j; ++e) {
      sp[e] = spow;
      spow *= s;
    }
    for (std::size_t i = 0; i <= j; ++i) {
      if (i > 0) binom = binom * (j - i + 1) / i;
      out[i] += c[j] * Rational(binom * sp[j - i]);
    }
  }
  return out;
}

inline CoeffPolynomial coeff_D(int n) {
  if (n < 0) throw std::invalid_argument("coeff_D: n < 0");
  auto& m = detail::coeff_memo();
  {
    std::lock_guard<std::mutex> lk(m.mu);
    auto it = m.d.find(n);
    if (it != m.d.end()) return it->second;
  }
  CoeffPolynomial b = coeff_B(n);
  auto up = shift_poly(b.c, 1), dn = shift_poly(b.c, -1);
  CoeffPolynomial p;
  p.n = n;
  p.kind = CoeffKind::D;
  p.c.resize(b.c.size());
  for (std::size_t j = 0; j < p.c.size(); ++j) p.c[j] = (up[j] - dn[j]) / 2;
  std::lock_guard<std::mutex> lk(m.mu);
  m.d.emplace(n, p);
  return p;
}

// D_n from the generating function e^{kt} sinh t (t^3/(6(sinh t - t)))^{(n+1)/3}
// by direct series multiplication.
inline CoeffPolynomial coeff_D_series(int n) {
  if (n < 0) throw std::invalid_argument("coeff_D_series: n < 0");
  Rational rho = -third(n + 1);
  std::vector<Rational> F(n + 1);
  for (int j = 0; j <= n; ++j) F[j] = potential(rho, j);
  // G = sinh t * F, truncated at t^n
  std::vector<Rational> G(n + 1, Rational(0));
  for (int s = 1; s <= n; s += 2)
    for (int j = 0; j + s <= n; ++j)
      if (F[j] != 0) G[j + s] += F[j] / factorial_q(s);
  CoeffPolynomial p;
  p.n = n;
  p.kind = CoeffKind::D;
  p.c.assign(n + 1, Rational(0));
  // [t^n] e^{kt} G(t) = sum_j k^{n-j}/(n-j)! G_j
  for (int j = 0; j <= n; ++j)
    if (G[j] != 0) p.c[n - j] = G[j] / factorial_q(n - j);
  return p;
}

inline GaussRational eval_exact(const CoeffPolynomial& p, const GaussRational& k) {
  GaussRational acc;
  for (int j = static_cast<int>(p.c.size()) - 1; j >= 0; --j) {
    acc *= k;
    acc.re += p.c[j];
  }
  return acc;
}

inline Rational eval_exact(const CoeffPolynomial& p, const Rational& k) {
  Rational acc = 0;
  for (int j = static_cast<int>(p.c.size()) - 1; j >= 0; --j) acc = acc * k + p.c[j];
  return acc;
}

template <class Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_same_v<Real, double>) {
    return static_cast<double>(static_cast<Real50>(q));
  } else {
    // numerator and denominator converted separately keep full precision
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
  }
}

// Horner evaluation at a floating point; coefficients are converted at 50 digits
// and the arithmetic is carried out in Complex50 before rounding to the target.
inline Complex50 eval_float50(const CoeffPolynomial& p, const Complex50& k) {
  Complex50 acc(0);
  for (int j = static_cast<int>(p.c.size()) - 1; j >= 0; --j)
    acc = acc * k + Complex50(to_real<Real50>(p.c[j]));
  return acc;
}

inline std::complex<double> eval_float(const CoeffPolynomial& p, std::complex<double> k, int digits = 16) {
  if (digits < 15) throw std::invalid_argument("eval_float: digits must be >= 15");
  if (digits > 45) throw std::invalid_argument("eval_float: at most 45 digits supported");
  Complex50 v = eval_float50(p, Complex50(Real50(k.real()), Real50(k.imag())));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Pretty form, e.g. "1/2*k^2 - 1/20".
inline std::string to_string(const CoeffPolynomial& p) {
  std::string s;
  bool first = true;
  for (int j = static_cast<int>(p.c.size()) - 1; j >= 0; --j) {
    Rational c = p.c[j];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    if (j == 0) {
      s += c.str();
    } else {
      if (c != 1) s += c.str() + "*";
      s += "k";
      if (j > 1) s += "^" + std::to_string(j);
    }
  }
  return first ? "0" : s;
}

}  // namespace nde
