#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "baxterlab/enumerate.hpp"

namespace baxterlab {

enum class Suite { all, rules, isomorphism, theorem, formulas };

std::string_view name(Suite s);
std::optional<Suite> parse_suite(std::string_view text);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // summary on success, first counterexample on failure
};

/// Runs the invariants of a suite for permutation lengths up to `max_n`.
/// Each check clamps max_n to the size its oracle can afford and says so in
/// its detail line.
std::vector<CheckResult> run_suite(Suite suite, int max_n, const BruteLimits& limits = {});

}  // namespace baxterlab
