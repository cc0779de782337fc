#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curvegen::testing {

inline constexpr std::uint64_t kAcceptanceSeed = 0x5eed'c0de'2024ULL;

struct CriterionResult {
  int number;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs the nine acceptance criteria in order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kAcceptanceSeed);

/// "PASS  3 genus-one-trichotomy: detail"
std::string format_line(const CriterionResult& result);

}  // namespace curvegen::testing
