#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace trefoil {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 31;
  unsigned threads = 0;  // 0: one per hardware thread
  std::vector<int> only;  // empty: all criteria
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// Runs the selected criteria in order, calling on_result after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  quandle axioms: ... (1.2 s)"
std::string format_result(const CriterionResult& r);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace trefoil
