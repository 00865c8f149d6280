#pragma once

#include <string>
#include <vector>

namespace ggm::checks {

struct CheckResult {
  std::string name;
  double max_deviation;
  double tolerance;
  bool passed() const { return max_deviation < tolerance; }
};

// Oracle cross-checks and symmetry commutators at N <= 8. inject_fault skews
// one exchange direction, a negative control that must trip the hermiticity
// check.
std::vector<CheckResult> run_checks(bool inject_fault);

// Prints one line per check; returns the process exit code (0 iff all passed).
int report(const std::vector<CheckResult>& results);

}  // namespace ggm::checks
