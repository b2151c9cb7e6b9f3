// Top-level verification suite: one pass/fail line per criterion.
#include <cstdio>

#include "bcw/verify.hpp"

int main() {
  auto results = bcw::run_acceptance(7);
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s  criterion %2d: %s (%s)\n", r.passed ? "PASS" : "FAIL",
                r.index, r.name.c_str(), r.detail.c_str());
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return all ? 0 : 1;
}
