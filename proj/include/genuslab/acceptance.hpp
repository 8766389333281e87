#pragma once

// The end-to-end checks behind `genuslab verify` and the acceptance test.

#include <functional>
#include <string>
#include <vector>

#include "genuslab/config.hpp"

namespace genuslab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 when untimed; exceeding it fails the criterion
};

/// Runs criteria 1..10 in order (or only `only` when nonzero), reporting each
/// as it finishes.
std::vector<CriterionResult> run_acceptance(const RunConfig& config = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {},
                                            int only = 0);

}  // namespace genuslab
