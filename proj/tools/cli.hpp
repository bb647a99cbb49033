#pragma once

#include <ostream>

namespace mbent::cli {

enum ExitCode : int {
  kOk = 0,
  kSelfTestFailure = 1,
  kUsageError = 2,
  kNumericalFailure = 3,
};

/// Entry point of the `mbent` command line. Data goes to `out`, diagnostics
/// to `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mbent::cli
