#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halfrep::cli {

enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,
  kUsage = 2,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace halfrep::cli
