// Acceptance matrix: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "nde/acceptance.hpp"

#include <iostream>

int main() {
  int failed = 0;
  for (auto& f : nde::acceptance::all_criteria()) {
    nde::acceptance::Result r = nde::acceptance::run_timed(f);
    std::cout << nde::acceptance::format_line(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
