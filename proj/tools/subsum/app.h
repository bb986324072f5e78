#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

namespace subsum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitGatingFailure = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Bad command-line input that the parser itself cannot see (invalid
/// object/family combinations, unknown check ids, ...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs the command line and returns the process exit code. Records go to
/// out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subsum::cli
