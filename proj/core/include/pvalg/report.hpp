#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pvalg {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  ///< counterexample or summary
};

/// Outcome of one verification suite on one target.
struct SuiteReport {
  std::string suite;
  std::string target;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// JSON array of several reports with an overall verdict.
std::string reports_to_json(const std::vector<SuiteReport>& reports);

}  // namespace pvalg
