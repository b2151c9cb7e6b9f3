#pragma once

#include <string>
#include <vector>

namespace bcw {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the ten top-level verification criteria; the seed drives every
// randomized check, so identical seeds reproduce identical runs.
std::vector<CriterionResult> run_acceptance(unsigned long seed);

}  // namespace bcw
