// Command-line front end exposing every module.

#include "nde/acceptance.hpp"
#include "nde/cache.hpp"
#include "nde/nde.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace nde;
using json = nlohmann::ordered_json;

struct ArgError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ArgError("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw ArgError("not a number: '" + s + "'");
  return v;
}

// Radians as a decimal, or a multiple of pi: "1.5pi", "-pi", "0.25*pi", "pi/4".
double parse_angle(std::string s) {
  s = trim(s);
  auto p = s.find("pi");
  if (p == std::string::npos) return parse_double(s);
  std::string head = trim(s.substr(0, p)), tail = trim(s.substr(p + 2));
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  double m = head.empty() || head == "+" ? 1.0 : head == "-" ? -1.0 : parse_double(head);
  double d = 1;
  if (!tail.empty()) {
    if (tail[0] != '/') throw ArgError("bad angle: '" + s + "'");
    d = parse_double(trim(tail.substr(1)));
    if (d == 0) throw ArgError("bad angle: division by zero");
  }
  return m * pi / d;
}

// "r,theta" with theta in parse_angle syntax; no reduction to the principal branch.
SheetedComplex parse_polar(const std::string& s) {
  auto c = s.find(',');
  if (c == std::string::npos) throw ArgError("expected r,theta but got '" + s + "'");
  double r = parse_double(trim(s.substr(0, c)));
  if (!(r > 0)) throw ArgError("modulus must be positive: '" + s + "'");
  return {r, parse_angle(s.substr(c + 1))};
}

GaussRational parse_exact_complex(const std::string& s) {
  try {
    return parse_gauss_rational(s);
  } catch (const std::exception& e) {
    throw ArgError(std::string("bad complex number '") + s + "': " + e.what());
  }
}

cplx to_double(const GaussRational& g) {
  return {static_cast<double>(to_real<Real50>(g.re)), static_cast<double>(to_real<Real50>(g.im))};
}

Complex50 c50(cplx v) { return {Real50(v.real()), Real50(v.imag())}; }

std::string polar_string(const SheetedComplex& z) {
  std::ostringstream os;
  os.precision(17);
  os << z.r << "," << z.theta;
  return os.str();
}

// One result line. The reference, when present, defines error_abs and error_rel.
struct Row {
  std::string label;
  json inputs = json::object();
  std::optional<Complex50> value;
  std::optional<Complex50> reference;
  json extra = json::object();
  std::string text;  // replaces the default text rendering when non-empty
};

struct Printer {
  std::string format = "text";
  int digits = 17;

  std::string num(const Real50& x) const {
    std::ostringstream os;
    os.precision(digits - 1);
    os << std::scientific << x;
    return os.str();
  }
  std::string cnum(const Complex50& z) const {
    std::string im = num(abs(z.imag()));
    return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + im + "i";
  }

  void emit(const std::vector<Row>& rows, std::ostream& os) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json o;
        o["label"] = r.label;
        o["inputs"] = r.inputs;
        o["value_re"] = r.value ? json(static_cast<double>(r.value->real())) : json(nullptr);
        o["value_im"] = r.value ? json(static_cast<double>(r.value->imag())) : json(nullptr);
        auto [ea, er] = errors(r);
        o["error_abs"] = ea ? json(*ea) : json(nullptr);
        o["error_rel"] = er ? json(*er) : json(nullptr);
        if (r.value && digits > 17) {
          o["value_re_digits"] = num(r.value->real());
          o["value_im_digits"] = num(r.value->imag());
        }
        for (auto& [k, v] : r.extra.items()) o[k] = v;
        arr.push_back(o);
      }
      os << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    } else if (format == "csv") {
      os << "label,value_re,value_im,error_abs,error_rel\n";
      for (const auto& r : rows) {
        auto [ea, er] = errors(r);
        std::string lab = r.label.find(',') == std::string::npos ? r.label : "\"" + r.label + "\"";
        os << lab << "," << (r.value ? num(r.value->real()) : "") << "," << (r.value ? num(r.value->imag()) : "")
           << "," << (ea ? num(*ea) : "") << "," << (er ? num(*er) : "") << "\n";
      }
    } else {
      for (const auto& r : rows) {
        if (!r.text.empty()) {
          os << r.text << "\n";
          continue;
        }
        os << r.label << " = " << (r.value ? cnum(*r.value) : "n/a");
        auto [ea, er] = errors(r);
        if (ea) os << "   (abs err " << num(*ea) << ", rel err " << num(*er) << ")";
        os << "\n";
      }
    }
  }

  static std::pair<std::optional<double>, std::optional<double>> errors(const Row& r) {
    if (!r.value || !r.reference) return {};
    Real50 e = abs(*r.value - *r.reference);
    Real50 m = abs(*r.reference);
    return {static_cast<double>(e), m > 0 ? std::optional<double>(static_cast<double>(e / m)) : std::nullopt};
  }
};

// ---- subcommands ----

std::vector<Row> cmd_coeffs(int n, const std::optional<std::string>& kappa, const std::string& kind) {
  if (n < 0) throw ArgError("--n must be non-negative");
  if (kind != "B" && kind != "D") throw ArgError("--kind must be B or D");
  CoeffPolynomial p = kind == "B" ? coeff_B(n) : coeff_D(n);
  Row r;
  r.label = kind + "_" + std::to_string(n);
  r.inputs = {{"n", n}, {"kind", kind}};
  r.extra["polynomial"] = to_string(p);
  r.text = r.label + " = " + to_string(p);
  if (kappa) {
    GaussRational k = parse_exact_complex(*kappa);
    GaussRational v = eval_exact(p, k);
    r.inputs["kappa"] = *kappa;
    r.value = Complex50(to_real<Real50>(v.re), to_real<Real50>(v.im));
    std::string exact = v.re.str();
    if (v.im != 0) exact += (v.im < 0 ? " - " : " + ") + Rational(abs(v.im)).str() + "i";
    r.extra["exact"] = exact;
    r.text += "\n" + r.label + "(" + *kappa + ") = " + exact;
  }
  return {r};
}

std::vector<Row> cmd_eval(FunctionKind kind, const SheetedComplex& z, cplx kappa, int terms, std::optional<int> hyper,
                          const Printer& pr) {
  if (terms < 0) throw ArgError("--terms must be non-negative");
  json in = {{"kind", kind_name(kind)}, {"z", polar_string(z)}, {"kappa", {kappa.real(), kappa.imag()}}, {"terms", terms}};
  std::vector<Row> rows;
  Complex50 ref;
  const bool boost_ref = hyper && z.theta == 0 && kappa.imag() == 0;
  if (boost_ref) ref = hankel1_reference50(kind == FunctionKind::H1p, z, kappa);
  else ref = c50(function_value(kind, z.value() - kappa, z));
  rows.push_back({"oracle", in, ref, std::nullopt});
  rows.push_back({"plain(N=" + std::to_string(terms) + ")", in, c50(partial_sum(kind, z, kappa, terms)), ref});
  if (hyper) {
    if (kind != FunctionKind::H1 && kind != FunctionKind::H1p) throw ArgError("--hyper applies to H1 and H1p only");
    if (*hyper < 0) throw ArgError("--hyper must be non-negative");
    CoeffKind ck = kind == FunctionKind::H1 ? CoeffKind::B : CoeffKind::D;
    TruncationPlan p0 = optimal_plan(z, 0, 0), p = optimal_plan(z, *hyper, *hyper);
    json hin = in;
    hin["N"] = p.N;
    hin["M"] = p.M;
    hin["K"] = p.K;
    rows.push_back({"optimal(N=M=" + std::to_string(p.N) + ")", hin, reexpanded50(ck, z, kappa, p0), ref});
    rows.push_back({"reexpanded(K=L=" + std::to_string(p.K) + ")", hin, reexpanded50(ck, z, kappa, p), ref});
  }
  (void)pr;
  return rows;
}

std::vector<Row> cmd_bounds(FunctionKind kind, const SheetedComplex& nu, int N, const std::optional<std::string>& cls,
                            const Printer& pr) {
  double R = std::abs(function_value(kind, nu.value(), nu) - partial_sum_equal_order(kind, nu, N));
  std::vector<SectorClass> classes;
  if (cls) classes.push_back(parse_sector_class(*cls));
  else classes = {SectorClass::Central, SectorClass::Rotated, SectorClass::NearStokes};
  std::vector<Row> rows;
  for (SectorClass sc : classes) {
    double b;
    try {
      b = bound({kind, N, sc, nu.theta}, nu);
    } catch (const std::domain_error& e) {
      if (cls) throw;
      continue;
    }
    Row r;
    r.label = "bound[" + sector_class_name(sc) + "]";
    r.inputs = {{"kind", kind_name(kind)}, {"nu", polar_string(nu)}, {"N", N}, {"class", sector_class_name(sc)}};
    r.value = Complex50(Real50(b), 0);
    r.extra = {{"true_remainder", R}, {"margin", b - R}, {"holds", b >= R}};
    r.text = r.label + ": bound " + pr.num(b) + ", |remainder| " + pr.num(R) + ", margin " + pr.num(b - R) +
             (b >= R ? "" : "  VIOLATED");
    rows.push_back(r);
  }
  if (rows.empty()) throw SectorViolation("no bound class applies at arg nu = " + std::to_string(nu.theta));
  return rows;
}

std::vector<Row> cmd_remainder(FunctionKind kind, const SheetedComplex& z, cplx kappa, int N) {
  json in = {{"kind", kind_name(kind)}, {"z", polar_string(z)}, {"kappa", {kappa.real(), kappa.imag()}}, {"N", N}};
  cplx sub = function_value(kind, z.value() - kappa, z) - partial_sum(kind, z, kappa, N);
  cplx quad = remainder_integral({kind, z, kappa, N});
  return {{"subtraction", in, c50(sub), std::nullopt}, {"quadrature", in, c50(quad), c50(sub)}};
}

std::vector<Row> cmd_terminant(double p, const SheetedComplex& w) {
  json in = {{"p", p}, {"w", polar_string(w)}};
  std::vector<Row> rows;
  Complex50 g = c50(terminant_gamma(p, w));
  rows.push_back({"gamma", in, g, std::nullopt});
  if (std::abs(w.theta) < pi) rows.push_back({"integral", in, c50(terminant_integral(p, w)), g});
  rows.push_back({"default", in, c50(terminant(p, w)), g});
  if (w.theta >= -3 * pi + sector_delta && w.theta <= pi - sector_delta)
    rows.push_back({"smoothing", in, c50(smoothing_approx(p, w)), g});
  return rows;
}

void cmd_stokes(double r, int grid, const Printer& pr, std::ostream& os) {
  if (grid < 1) throw ArgError("--grid must be positive");
  std::vector<double> th;
  for (int j = 0; j < grid; ++j) th.push_back(-0.75 * pi + 0.5 * pi * (j + 1) / (grid + 1));
  auto rows = stokes_profile(r, 0.0, th);
  if (pr.format == "json") {
    json arr = json::array();
    for (const auto& x : rows)
      arr.push_back({{"inputs", {{"r", r}, {"theta", x.theta}}},
                     {"value_re", x.terminant.real()},
                     {"value_im", x.terminant.imag()},
                     {"error_abs", std::abs(x.terminant - x.erf_profile)},
                     {"error_rel", std::abs(x.terminant - x.erf_profile) / std::max(1e-300, std::abs(x.erf_profile))},
                     {"erf", x.erf_profile}});
    os << arr.dump(2) << "\n";
    return;
  }
  char buf[256];
  const int d = pr.digits - 1;
  os << "theta,re,im,erf\n";
  for (const auto& x : rows) {
    std::snprintf(buf, sizeof buf, "%.*e,%.*e,%.*e,%.*e\n", d, x.theta, d, x.terminant.real(), d, x.terminant.imag(), d,
                  x.erf_profile);
    os << buf;
  }
}

std::vector<Row> cmd_late(bool table1, std::optional<int> n, const std::optional<std::string>& kappa,
                          std::optional<int> M, const Printer& pr) {
  std::vector<Row> rows;
  auto label = [](int n_, const GaussRational& k, int M_) {
    std::string ks = k.re.str();
    if (k.im != 0) ks += (k.im < 0 ? "" : "+") + k.im.str() + "i";
    return "n=" + std::to_string(n_) + ",kappa=" + ks + ",M=" + std::to_string(M_);
  };
  if (table1) {
    if (n || kappa || M) throw ArgError("--table1 takes no other late options");
    for (const auto& t : table1_reproduce()) {
      Row r;
      r.label = label(t.n, t.kappa, t.M);
      r.inputs = {{"n", t.n}, {"kappa", r.label.substr(r.label.find("kappa=") + 6)}, {"M", t.M}};
      r.value = Complex50(t.approx, 0);
      r.reference = Complex50(t.exact, 0);
      r.extra = {{"exact", pr.num(t.exact)}, {"approx", pr.num(t.approx)}, {"error", pr.num(t.error())}};
      Printer wide = pr;
      wide.digits = std::max(pr.digits, 25);
      r.text = r.label + ": exact " + wide.num(t.exact) + "  approx " + wide.num(t.approx) + "  error " +
               wide.num(t.error());
      rows.push_back(r);
    }
    return rows;
  }
  if (!n || !kappa || !M) throw ArgError("late needs --table1 or all of --n, --kappa, --M");
  GaussRational k = parse_exact_complex(*kappa);
  LateApprox a = inverse_factorial_approx(*n, k, *M);
  GaussRational ex = eval_exact(coeff_B(*n), k);
  Row r;
  r.label = label(*n, k, *M);
  r.inputs = {{"n", *n}, {"kappa", *kappa}, {"M", *M}};
  r.value = a.value;
  r.reference = Complex50(to_real<Real50>(ex.re), to_real<Real50>(ex.im));
  rows.push_back(r);
  return rows;
}

int cmd_selfcheck(const Printer& pr, std::ostream& os) {
  json arr = json::array();
  bool all = true;
  for (auto& f : acceptance::all_criteria()) {
    acceptance::Result r = acceptance::run_timed(f);
    all = all && r.pass;
    if (pr.format == "json") {
      arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    } else if (pr.format == "csv") {
      if (r.id == 1) os << "id,pass,seconds,name\n";
      os << r.id << "," << (r.pass ? "PASS" : "FAIL") << "," << r.seconds << ",\"" << r.name << "\"\n";
    } else {
      os << acceptance::format_line(r) << std::endl;
    }
  }
  if (pr.format == "json") os << arr.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bessel and Hankel functions with order close to argument: expansions, remainders, terminants"};
  app.require_subcommand(1);
  app.fallthrough();

  Printer pr;
  std::string cache;
  app.add_option("--format", pr.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--precision", pr.digits, "significant digits in output (>= 15)")->check(CLI::Range(15, 50));
  app.add_option("--cache", cache, "coefficient cache file, loaded before and saved after the command");

  std::string kind_s = "H1", z_s, nu_s, w_s, kappa_s = "0", coeff_kind = "B";
  std::optional<std::string> kappa_opt, class_opt;
  int n = 0, terms = 0, N = 0, grid = 50;
  std::optional<int> hyper, late_n, late_M;
  double p = 1, r = 10;
  bool table1 = false;

  auto* coeffs = app.add_subcommand("coeffs", "exact coefficient polynomials B_n or D_n");
  coeffs->add_option("--n", n, "index")->required();
  coeffs->add_option("--kappa", kappa_opt, "evaluate at a rational or Gaussian rational k");
  coeffs->add_option("--kind", coeff_kind, "B or D");

  auto* eval = app.add_subcommand("eval", "truncated expansion against the oracle");
  eval->add_option("--kind", kind_s, "H1|H2|J|Y|H1p|H2p|Jp|Yp");
  eval->add_option("--z", z_s, "r,theta")->required();
  eval->add_option("--kappa", kappa_s, "k = z - nu");
  eval->add_option("--terms", terms, "number of terms")->required();
  eval->add_option("--hyper", hyper, "terminant re-expansion depth K = L");

  auto* bounds = app.add_subcommand("bounds", "explicit error bounds at nu = z");
  bounds->add_option("--kind", kind_s, "H1|H1p|J|Y|Jp|Yp")->required();
  bounds->add_option("--nu", nu_s, "r,theta")->required();
  bounds->add_option("--N", N, "number of terms")->required();
  bounds->add_option("--class", class_opt, "central|rotated|near_stokes (default: all applicable)");

  auto* rem = app.add_subcommand("remainder", "remainder by quadrature against subtraction");
  rem->add_option("--kind", kind_s, "H1|H2|J|Y|H1p|H2p|Jp|Yp")->required();
  rem->add_option("--z", z_s, "r,theta")->required();
  rem->add_option("--kappa", kappa_s, "k = z - nu");
  rem->add_option("--N", N, "number of terms")->required();

  auto* term = app.add_subcommand("terminant", "scaled terminant by both backends");
  term->add_option("--p", p, "order")->required();
  term->add_option("--w", w_s, "r,theta")->required();

  auto* stokes = app.add_subcommand("stokes", "terminant profile across the Stokes line");
  stokes->add_option("--r", r, "|z|");
  stokes->add_option("--grid", grid, "number of angles");

  auto* late = app.add_subcommand("late", "late-coefficient approximations");
  late->add_flag("--table1", table1, "reproduce the four-row reference table");
  late->add_option("--n", late_n, "index");
  late->add_option("--kappa", kappa_opt, "k (rational or Gaussian rational)");
  late->add_option("--M", late_M, "number of inverse factorial terms");

  auto* self = app.add_subcommand("selfcheck", "run the acceptance matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!cache.empty()) load_cache(cache);
    std::vector<Row> rows;
    int rc = 0;
    auto kappa_c = [&] { return to_double(parse_exact_complex(kappa_s)); };
    if (coeffs->parsed()) {
      rows = cmd_coeffs(n, kappa_opt, coeff_kind);
    } else if (eval->parsed()) {
      rows = cmd_eval(parse_kind(kind_s), parse_polar(z_s), kappa_c(), terms, hyper, pr);
    } else if (bounds->parsed()) {
      rows = cmd_bounds(parse_kind(kind_s), parse_polar(nu_s), N, class_opt, pr);
    } else if (rem->parsed()) {
      rows = cmd_remainder(parse_kind(kind_s), parse_polar(z_s), kappa_c(), N);
    } else if (term->parsed()) {
      rows = cmd_terminant(p, parse_polar(w_s));
    } else if (stokes->parsed()) {
      cmd_stokes(r, grid, pr, std::cout);
    } else if (late->parsed()) {
      rows = cmd_late(table1, late_n, kappa_opt, late_M, pr);
    } else if (self->parsed()) {
      rc = cmd_selfcheck(pr, std::cout);
    }
    if (!rows.empty()) pr.emit(rows, std::cout);
    if (!cache.empty()) save_cache(cache);
    return rc;
  } catch (const NonConvergence& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
