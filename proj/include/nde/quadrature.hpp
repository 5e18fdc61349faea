#pragma once

#include "nde/common.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <queue>
#include <vector>
#include <cmath>
#include <string>

namespace nde {

struct QuadratureConfig {
  double rel_tol = 1e-13;
  double abs_tol = 1e-300;
  unsigned max_refinements = 20;
};

inline void check_tolerance(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0 && cfg.rel_tol <= 1e-6))
    throw std::invalid_argument("QuadratureConfig: rel_tol must lie in (0, 1e-6]");
}

inline std::string fmt_g(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", x);
  return b;
}

// Sum of integrals over several paths sharing one error budget. Globally
// adaptive: the subinterval with the largest Gauss-Kronrod error estimate is
// bisected until the total meets the tolerance or the round-off floor.
template <class V>
class PathIntegral {
 public:
  explicit PathIntegral(const QuadratureConfig& cfg) : cfg_(cfg) { check_tolerance(cfg); }

  template <class F>
  void add(F&& f, std::vector<double> pts, V weight = V(1)) {
    std::sort(pts.begin(), pts.end());
    fs_.emplace_back([f, weight](double x) -> V { return weight * V(f(x)); });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i + 1] > pts[i]) push(eval(fs_.size() - 1, pts[i], pts[i + 1]));
  }

  V result() {
    using std::abs;
    const std::size_t max_pieces = std::size_t(1) << std::min(cfg_.max_refinements, 16u);
    while (!q_.empty() && q_.size() < max_pieces) {
      if (err_ <= std::max(cfg_.abs_tol, cfg_.rel_tol * abs(tot_)) || err_ <= floor()) break;
      Piece p = q_.top();
      double mid = 0.5 * (p.a + p.b);
      if (!(mid > p.a && mid < p.b)) break;
      q_.pop();
      remove(p);
      push(eval(p.fi, p.a, mid));
      push(eval(p.fi, mid, p.b));
    }
    if (!std::isfinite(abs(tot_)) || !std::isfinite(err_) ||
        err_ > std::max({cfg_.abs_tol, 1e3 * cfg_.rel_tol * abs(tot_), 4 * floor()}))
      throw NonConvergence("quadrature did not converge: error estimate " + fmt_g(err_) + ", value " +
                           fmt_g(abs(tot_)) + ", L1 norm " + fmt_g(l1_));
    return tot_;
  }
  double error() const { return err_; }
  double l1() const { return l1_; }

 private:
  struct Piece {
    std::size_t fi;
    double a, b;
    V v;
    double err, l1;
    bool operator<(const Piece& o) const { return err < o.err; }
  };
  double floor() const { return 64 * 2.2e-16 * l1_; }
  // 31-point Kronrod rule with its embedded 15-point Gauss rule; the error
  // estimate is |K - G|. The nodes and weights come from Boost.
  Piece eval(std::size_t fi, double lo, double hi) {
    using boost::math::quadrature::gauss_kronrod;
    using std::abs;
    static const auto& xk = gauss_kronrod<double, 31>::abscissa();
    static const auto& wk = gauss_kronrod<double, 31>::weights();
    static const auto& wg = boost::math::quadrature::gauss<double, 15>::weights();
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    const auto& f = fs_[fi];
    V fc = f(c);
    V K = wk[0] * fc, G = wg[0] * fc;
    double l = wk[0] * abs(fc);
    for (std::size_t j = 1; j < xk.size(); ++j) {
      V a = f(c - h * xk[j]), b = f(c + h * xk[j]);
      K += wk[j] * (a + b);
      l += wk[j] * (abs(a) + abs(b));
      if (j % 2 == 0) G += wg[j / 2] * (a + b);
    }
    return Piece{fi, lo, hi, h * K, abs(h * (K - G)), h * l};
  }
  void push(const Piece& p) {
    tot_ += p.v;
    err_ += p.err;
    l1_ += p.l1;
    q_.push(p);
  }
  void remove(const Piece& p) {
    tot_ -= p.v;
    err_ -= p.err;
    l1_ -= p.l1;
  }

  QuadratureConfig cfg_;
  std::vector<std::function<V(double)>> fs_;
  std::priority_queue<Piece> q_;
  V tot_{};
  double err_ = 0, l1_ = 0;
};

// Integral over [a, b] split at the given interior breakpoints.
template <class F>
auto integrate_pieces(F&& f, std::vector<double> pts, const QuadratureConfig& cfg) {
  using V = decltype(f(pts.front()));
  PathIntegral<V> I(cfg);
  I.add(f, std::move(pts));
  return I.result();
}

template <class F>
auto integrate(F&& f, double a, double b, const QuadratureConfig& cfg) {
  return integrate_pieces(f, {a, b}, cfg);
}

}  // namespace nde
