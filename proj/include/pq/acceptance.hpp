#pragma once

#include <string>
#include <vector>

#include "pq/budget.hpp"

namespace pq {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1..10). Never throws for library errors; they
/// are reported as a failed criterion with the error text as detail.
CriterionResult run_criterion(int id, const BudgetLimits& limits = {});

std::vector<CriterionResult> run_acceptance(const BudgetLimits& limits = {});

}  // namespace pq
