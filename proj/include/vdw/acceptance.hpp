#pragma once

#include <numbers>
#include <string>
#include <vector>

namespace vdw {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AcceptanceOptions {
  /// Expected large-r limit of -E r^7 / A^2. Only tests change this, to
  /// check that a wrong constant is caught.
  double casimir_polder_constant = 23.0 / (4.0 * std::numbers::pi);
};

/// Runs every acceptance criterion. Output is deterministic: details carry
/// measured errors but no timings.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opts = {});

/// One "PASS"/"FAIL" line per criterion plus a summary line.
std::string format_report(const std::vector<CriterionResult> &results);

bool all_passed(const std::vector<CriterionResult> &results);

} // namespace vdw
