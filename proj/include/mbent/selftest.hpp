#pragma once

#include <ostream>
#include <string>

#include "mbent/bec.hpp"

namespace mbent {

struct SelfTestConfig {
  /// Interaction used by the model checks; swapped out in mutation tests.
  bec::InteractionFn interaction = &bec::interaction_coefficient;
};

struct SelfTestSummary {
  int checks = 0;
  int passed = 0;
  /// Name of the first failing check, empty when all pass.
  std::string first_failure;

  bool ok() const { return checks == passed; }
};

/// Runs the built-in invariant suite, logging one PASS/FAIL line per check.
SelfTestSummary run_selftest(std::ostream& log, const SelfTestConfig& config = {});

}  // namespace mbent
