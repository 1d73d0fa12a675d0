#pragma once

// The acceptance suite, shared by `zap selftest` and the test binary.

#include <functional>
#include <string>
#include <vector>

namespace zap {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // measured ratios
  double seconds = 0;
};

struct AcceptanceOptions {
  std::string workdir;              // scratch directory for the determinism runs
  std::vector<int> only;            // empty = all
  int jobs = 8;
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// One line per criterion.
std::string format_result(const CriterionResult& r);

}  // namespace zap
