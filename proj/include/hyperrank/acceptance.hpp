#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperrank {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool passed() const;
};

struct AcceptanceOptions {
  bool quick = false;  // restrict every size parameter to d <= 15
  // Digit-equation counter used by the rank-table check; replaceable for mutation tests.
  std::function<std::uint64_t(std::uint64_t k, int d)> digit_counter;
};

constexpr int kCriterionCount = 10;
CriterionResult run_criterion(int id, const AcceptanceOptions& opts);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);
// One line per criterion plus indented failing checks; returns the number of failed criteria.
int print_acceptance(const std::vector<CriterionResult>& results, std::ostream& os, bool verbose);

}  // namespace hyperrank
