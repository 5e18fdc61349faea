#pragma once

// Plain-text disk cache for exact coefficients.
//
//   nde-coeff-cache 1
//   B <n> <m> <num>/<den> ... (m = number of coefficients, lowest power first)
//
// One record per line; lines starting with '#' are ignored.

#include "nde/exact.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace nde {

inline constexpr const char* cache_magic = "nde-coeff-cache";
inline constexpr int cache_version = 1;

inline std::string cache_record(const CoeffPolynomial& p) {
  std::ostringstream os;
  os << (p.kind == CoeffKind::B ? 'B' : 'D') << ' ' << p.n << ' ' << p.c.size();
  for (const auto& c : p.c)
    os << ' ' << boost::multiprecision::numerator(c).str() << '/' << boost::multiprecision::denominator(c).str();
  return os.str();
}

inline CoeffPolynomial parse_cache_record(const std::string& line) {
  std::istringstream is(line);
  char k = 0;
  CoeffPolynomial p;
  std::size_t m = 0;
  if (!(is >> k >> p.n >> m) || (k != 'B' && k != 'D') || p.n < 0)
    throw std::runtime_error("coefficient cache: malformed record");
  p.kind = k == 'B' ? CoeffKind::B : CoeffKind::D;
  p.c.reserve(m);
  std::string tok;
  for (std::size_t j = 0; j < m; ++j) {
    if (!(is >> tok)) throw std::runtime_error("coefficient cache: truncated record");
    p.c.emplace_back(tok);
  }
  return p;
}

// Writes every memoised B_n and D_n.
inline void save_cache(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write coefficient cache: " + path);
  os << cache_magic << ' ' << cache_version << '\n';
  for (int n : memoised_orders(CoeffKind::B)) os << cache_record(coeff_B(n)) << '\n';
  for (int n : memoised_orders(CoeffKind::D)) os << cache_record(coeff_D(n)) << '\n';
}

// Computes B_0..B_nmax and D_0..D_nmax first, then writes the memo.
inline void save_cache(const std::string& path, int nmax) {
  for (int n = 0; n <= nmax; ++n) {
    coeff_B(n);
    coeff_D(n);
  }
  save_cache(path);
}

// Seeds the in-memory memo; returns the number of records read. A missing
// file is not an error.
inline int load_cache(const std::string& path) {
  std::ifstream is(path);
  if (!is) return 0;
  std::string magic;
  int ver = 0;
  if (!(is >> magic >> ver) || magic != cache_magic) throw std::runtime_error("not a coefficient cache: " + path);
  if (ver != cache_version) throw std::runtime_error("unsupported coefficient cache version " + std::to_string(ver));
  std::string line;
  std::getline(is, line);
  int count = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    seed_coeff(parse_cache_record(line));
    ++count;
  }
  return count;
}

}  // namespace nde
