#ifndef LPFOURIER_VERIFY_HPP
#define LPFOURIER_VERIFY_HPP

// Named acceptance suites, shared by the `verify` CLI command and the
// acceptance test binary. Every criterion pins its tolerances in code.

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpfourier::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  unsigned workers = 1;
  /// Progress and per-check diagnostics; may be null.
  std::ostream* log = nullptr;
};

/// Criterion names in order, followed by the aggregate suites "quick" and "all".
std::vector<std::string> suite_names();

bool is_suite(std::string_view name);

/// Runs one criterion by name, or an aggregate. Throws std::invalid_argument for unknown names.
std::vector<CriterionResult> run_suite(std::string_view name, const SuiteOptions& opts);

/// One line per criterion: "[PASS] 6 upper-bound (12.3 s): detail".
void print_results(std::ostream& os, std::span<const CriterionResult> results);

}  // namespace lpfourier::acceptance

#endif  // LPFOURIER_VERIFY_HPP
