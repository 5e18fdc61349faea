#pragma once

// The acceptance matrix: each criterion returns pass/fail with a one-line
// detail. Shared by the acceptance test binary and `nde selfcheck`.

#include "nde/nde.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace nde::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

inline std::string fmt(const char* f, double x) {
  char b[64];
  std::snprintf(b, sizeof b, f, x);
  return b;
}

// Round to k significant digits in scientific form; used to compare printed
// table entries digit by digit.
inline std::string sig(const Real50& x, int k) {
  std::ostringstream os;
  os.precision(k - 1);
  os << std::scientific << x;
  return os.str();
}

inline int printed_digits(const std::string& mant) {
  int d = 0;
  bool lead = true;
  for (char c : mant) {
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (lead && c == '0') continue;
    lead = false;
    ++d;
  }
  return d;
}

}  // namespace detail

inline Result c1_closed_forms() {
  Result r{1, "closed-form coefficients B_0..B_4, D_1"};
  const Rational k0(0);
  std::vector<std::vector<Rational>> want = {
      {1},
      {0, 1},
      {Rational(-1, 20), 0, Rational(1, 2)},
      {0, Rational(-1, 15), 0, Rational(1, 6)},
      {Rational(1, 280), 0, Rational(-1, 24), 0, Rational(1, 24)}};
  bool ok = true;
  for (int n = 0; n <= 4; ++n) ok = ok && coeff_B(n).c == want[n];
  CoeffPolynomial d1 = coeff_D(1);
  bool dok = d1.degree() == 0 && d1.c[0] == 1;
  r.pass = ok && dok;
  r.detail = std::string("B_0..B_4 ") + (ok ? "exact" : "MISMATCH") + ", D_1 " + (dok ? "= 1" : "!= 1");
  return r;
}

inline Result c2_route_triangulation(int nmax = 60) {
  Result r{2, "three coefficient routes agree for n <= 60"};
  int bad = -1;
  for (int n = 0; n <= nmax && bad < 0; ++n) {
    CoeffPolynomial a = coeff_B(n);
    if (!(a == coeff_B_comtet(n)) || !(a == coeff_B_lauwerier(n))) bad = n;
  }
  r.pass = bad < 0;
  r.detail = r.pass ? "Airey = Comtet = Lauwerier coefficientwise, n = 0.." + std::to_string(nmax)
                    : "first disagreement at n = " + std::to_string(bad);
  return r;
}

struct PrintedRow {
  int n;
  GaussRational kappa;
  int M;
  const char* exact;
  const char* approx;
  const char* error;
};

inline const std::vector<PrintedRow>& printed_table() {
  static const std::vector<PrintedRow> t = {
      {100, GaussRational(3), 50, "0.7745012865285354362490235e-17", "0.7745012865519805241476135e-17",
       "-0.234450878985899e-27"},
      {100, GaussRational(2, 2), 50, "0.5529397074469944063403455e-12", "0.5529395059975027990719201e-12",
       "0.2014494916072684254e-18"},
      {200, GaussRational(5), 100, "0.2945913249283174576021141e-12", "0.2945913249283174576024119e-12",
       "-0.2978e-33"},
      {200, GaussRational(4, 3), 100, "0.1508584308199912914799076e-5", "0.1508584308199923691209822e-5",
       "-0.10776410746e-19"}};
  return t;
}

inline Result c3_table() {
  Result r{3, "late-coefficient table reproduced"};
  std::ostringstream os;
  bool all = true;
  int i = 0;
  for (const auto& p : printed_table()) {
    ++i;
    Table1Row row = late_row(p.n, p.kappa, p.M);
    double de = agreeing_digits(row.exact, Real50(p.exact));
    double da = agreeing_digits(row.approx, Real50(p.approx));
    Real50 pe(p.error);
    std::string em = std::string(p.error).substr(0, std::string(p.error).find('e'));
    int k = std::min(6, detail::printed_digits(em));
    bool sign = (row.error() < 0) == (pe < 0);
    bool lead = detail::sig(row.error(), k) == detail::sig(pe, k);
    bool ok = de >= 22 && da >= 22 && sign && lead;
    all = all && ok;
    os << (i > 1 ? "; " : "") << "row" << i << " exact " << detail::fmt("%.1f", de) << "d approx "
       << detail::fmt("%.1f", da) << "d error " << detail::sig(row.error(), k) << " (" << k << "d" << (sign ? "" : " SIGN")
       << (lead ? "" : " MISMATCH") << ")";
  }
  r.pass = all;
  r.detail = os.str();
  return r;
}

inline Result c4_beta() {
  Result r{4, "beta constant to 10 digits"};
  Real50 b = dingle_beta();
  std::string s = detail::sig(b, 10);
  r.pass = s == detail::sig(Real50("0.1530827453"), 10);
  r.detail = "beta = " + detail::sig(b, 20);
  return r;
}

struct RemainderCase {
  FunctionKind kind;
  SheetedComplex z;
  cplx kappa;
  int N;
};

inline std::vector<RemainderCase> remainder_cases() {
  using K = FunctionKind;
  return {{K::H1, {10, 0}, 0.2, 0},         {K::H1, {15, pi / 4}, 0.0, 6},   {K::H1, {12, 1.3 * pi}, 0.3, 4},
          {K::H2, {12, -0.4 * pi}, 0.3, 4}, {K::J, {12, 0.3}, 0.4, 5},       {K::Y, {12, -0.3}, 0.4, 5},
          {K::H1p, {12, 0.3}, 0.4, 5},      {K::Jp, {12, 0.3}, 0.4, 5},      {K::Yp, {12, -0.3}, 0.4, 5},
          {K::H2p, {12, -0.3}, 0.4, 5},     {K::H1, {12, 2.0}, 0.0, 4},      {K::J, {20, 0}, 0.0, 6}};
}

inline Result c5_resurgence() {
  Result r{5, "remainder integrals equal oracle minus partial sum"};
  double worst = 0;
  int bad = 0;
  for (const auto& c : remainder_cases()) {
    cplx R = remainder_integral({c.kind, c.z, c.kappa, c.N});
    cplx S = function_value(c.kind, c.z.value() - c.kappa, c.z) - partial_sum(c.kind, c.z, c.kappa, c.N);
    double e = std::abs(R - S) / std::abs(S);
    worst = std::max(worst, e);
    if (!(e <= 1e-9)) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(remainder_cases().size()) + " cases, worst relative difference " + detail::fmt("%.2e", worst);
  return r;
}

struct SweepStats {
  int cases = 0, failures = 0, near_stokes = 0;
  double min_ratio = 1e300;
};

inline SweepStats bound_sweep() {
  using K = FunctionKind;
  SweepStats s;
  for (K k : {K::H1, K::H1p, K::J, K::Y, K::Jp, K::Yp}) {
    const bool hk = base_kind(k) == K::H1;
    const double lo = -pi, hi = hk ? 2 * pi : pi;
    for (double a : {15.0, 40.0})
      for (int N = 1; N <= 6; ++N)
        for (int j = 1; j <= 24; ++j) {
          const double th = lo + (hi - lo) * j / 25.0;
          SheetedComplex nu(a, th);
          double R = std::abs(function_value(k, nu.value(), nu) - partial_sum_equal_order(k, nu, N));
          for (SectorClass sc : {SectorClass::Central, SectorClass::Rotated, SectorClass::NearStokes}) {
            double b;
            try {
              b = bound({k, N, sc, th}, nu);
            } catch (const SectorViolation&) {
              continue;
            } catch (const TooSmallN&) {
              continue;
            }
            ++s.cases;
            if (sc == SectorClass::NearStokes) ++s.near_stokes;
            s.min_ratio = std::min(s.min_ratio, b / R);
            if (!(b >= R)) ++s.failures;
          }
        }
  }
  return s;
}

inline Result c6_bound_sweep() {
  Result r{6, "explicit bounds dominate the true remainder"};
  SweepStats s = bound_sweep();
  r.pass = s.failures == 0 && s.cases > 0 && s.near_stokes > 0;
  r.detail = std::to_string(s.cases) + " cases (" + std::to_string(s.near_stokes) + " near-Stokes), " +
             std::to_string(s.failures) + " failures, min bound/remainder " + detail::fmt("%.6f", s.min_ratio);
  return r;
}

inline Result c7_uniform_constant() {
  Result r{7, "C_N(kappa)/|z|^{(N+1)/3} dominates R_N on the upper half plane"};
  const cplx kappa = 0.3;
  int cases = 0, bad = 0;
  double worst = 0;
  for (int N : {0, 3, 6}) {
    const double C = appendix_b_constant(N, kappa);
    for (double th : {0.0, pi / 4, pi / 2, 3 * pi / 4, pi}) {
      SheetedComplex z(10, th);
      double R = std::abs(function_value(FunctionKind::H1, z.value() - kappa, z) - partial_sum(FunctionKind::H1, z, kappa, N));
      double b = C / std::pow(z.r, (N + 1) / 3.0);
      ++cases;
      worst = std::max(worst, R / b);
      if (!(R <= b)) ++bad;
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(cases) + " cases, max |R|/bound " + detail::fmt("%.4f", worst);
  return r;
}

inline Result c8_terminant() {
  Result r{8, "terminant backends and magnitude regimes"};
  double worst = 0;
  for (double p : {2.5, 10.0, 40.0})
    for (double m : {0.5, 1.0, 5.0, 20.0, 60.0})
      for (int j = -18; j <= 18; ++j) {
        SheetedComplex w(m, 0.05 * pi * j);
        worst = std::max(worst, rel_diff(terminant_integral(p, w), terminant_gamma(p, w)));
      }
  double small = 0, big = 0;
  for (double p : {10.0, 20.0}) {
    for (int j = -40; j <= 40; ++j) {
      SheetedComplex w(p, pi * j / 40.0);
      small = std::max(small, std::abs(terminant(p, w)) / std::exp(-w.value().real() - p));
    }
    for (int j = 0; j < 80; ++j) {
      SheetedComplex w(p, -pi - 2 * pi * j / 80.0);
      big = std::max(big, std::abs(terminant(p, w)));
    }
  }
  r.pass = worst <= 1e-12 && small <= 10 && big <= 10 && big >= 0.1;
  r.detail = "backend agreement " + detail::fmt("%.2e", worst) + ", max |T|/e^{-w-|w|} " + detail::fmt("%.3f", small) +
             " on |arg w|<=pi, max |T| " + detail::fmt("%.3f", big) + " on (-3pi,-pi]";
  return r;
}

inline Result c9_stokes() {
  Result r{9, "Berry smoothing across arg z = -pi/2"};
  const double rad = 10;
  std::vector<double> g;
  for (int j = 1; j <= 200; ++j) g.push_back(-0.75 * pi + 0.5 * pi * j / 201.0);
  auto rows = stokes_profile(rad, 0.0, g);
  cplx mid = stokes_profile(rad, 0.0, {-pi / 2})[0].terminant;
  double dev = 0, tail_rise = 0, prev = 2, prev_core = 2;
  bool mono = true;
  for (const auto& row : rows) {
    dev = std::max(dev, std::abs(row.terminant - row.erf_profile));
    double v = row.terminant.real();
    tail_rise = std::max(tail_rise, v - prev);
    prev = v;
    if (row.theta >= -0.6 * pi && row.theta <= -0.4 * pi) {
      if (!(v < prev_core)) mono = false;
      prev_core = v;
    }
  }
  const double tol = 1.5 / std::sqrt(2 * pi * rad);
  const bool half = std::abs(mid.real() - 0.5) <= 0.01;
  r.pass = half && dev <= tol && mono;
  r.detail = "value at -pi/2 = " + detail::fmt("%.6f", mid.real()) + detail::fmt("%+.6fi", mid.imag()) +
             ", max |profile - erf| " + detail::fmt("%.4f", dev) + " (tol " + detail::fmt("%.3f", tol) + "), " +
             (mono ? "strictly decreasing" : "NOT monotone") + " on [-0.6pi,-0.4pi], largest tail rise " +
             detail::fmt("%.1e", std::max(0.0, tail_rise));
  return r;
}

inline Result c10_hyper() {
  Result r{10, "re-expansion improvement and residual scaling"};
  double worst = 0;
  for (double rad : {3.0, 5.0})
    for (double k : {0.0, 0.3}) {
      SheetedComplex z(rad, 0);
      Complex50 ref = hankel1_reference50(false, z, k);
      double plain = static_cast<double>(abs(reexpanded50(CoeffKind::B, z, k, optimal_plan(z, 0, 0)) - ref));
      double re = static_cast<double>(abs(reexpanded50(CoeffKind::B, z, k, optimal_plan(z, 6, 6)) - ref));
      worst = std::max(worst, re / plain);
    }
  const int K = 3;
  ScalingFit f = residual_scaling(K, {2, 4, 8}, 0.0);
  const double target = -(K + 1) / 3.0;
  const bool slope_ok = std::abs(f.slope - target) <= 0.7;
  r.pass = worst <= 1e-2 && slope_ok;
  r.detail = "max re-expanded/plain error " + detail::fmt("%.2e", worst) + ", slope " + detail::fmt("%.3f", f.slope) +
             " vs " + detail::fmt("%.3f", target);
  return r;
}

inline Result c11_late() {
  Result r{11, "late-coefficient asymptotics"};
  const GaussRational k3(3);
  Complex50 ex = eval_float50(coeff_B(100), Complex50(3));
  double tt = static_cast<double>(abs(two_term_late(100, k3) - ex) / abs(ex));
  double w = static_cast<double>(watson_late(100) / to_real<Real50>(eval_exact(coeff_B(200), Rational(0))));
  DingleReport d = dingle_check(60);
  double dr = static_cast<double>(d.ratio());
  OptimalM om = optimal_truncation_scan(100, k3, 10, 90);
  bool a = tt <= 0.01, b = std::abs(w - 1) <= 0.02, c = std::abs(dr - 1) <= 0.05, e = om.M >= 40 && om.M <= 60;
  r.pass = a && b && c && e;
  r.detail = std::string("two-term rel error ") + detail::fmt("%.3f", tt) + (a ? "" : " FAIL") + ", Watson ratio " +
             detail::fmt("%.5f", w) + (b ? "" : " FAIL") + ", Dingle ratio " + detail::fmt("%.5f", dr) + (c ? "" : " FAIL") +
             " (three-term " + detail::fmt("%.6f", static_cast<double>(d.ratio3())) + "), optimal M " +
             std::to_string(om.M) + (e ? "" : " FAIL");
  return r;
}

inline Result c12_watson_inequalities() {
  Result r{12, "Watson-type inequalities at nu = 5, 10, 50"};
  bool ok = true;
  std::ostringstream os;
  for (double nu : {5.0, 10.0, 50.0}) {
    WatsonReport w = watson_inequalities(nu);
    bool here = w.jp_below && w.yp_above && w.r1_jp_negative;
    ok = ok && here;
    os << (nu > 5 ? "; " : "") << "nu=" << nu << (here ? " ok" : " FAIL") << " (R1=" << detail::fmt("%.2e", w.r1_jp) << ")";
  }
  r.pass = ok;
  r.detail = os.str();
  return r;
}

inline std::vector<std::function<Result()>> all_criteria() {
  return {c1_closed_forms, [] { return c2_route_triangulation(); }, c3_table, c4_beta, c5_resurgence,
          c6_bound_sweep,  c7_uniform_constant, c8_terminant, c9_stokes, c10_hyper, c11_late, c12_watson_inequalities};
}

inline Result run_timed(const std::function<Result()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string format_line(const Result& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] criterion %2d: ", r.pass ? "PASS" : "FAIL", r.id);
  return head + r.name + " | " + r.detail + " | " + detail::fmt("%.2fs", r.seconds);
}

}  // namespace nde::acceptance
