#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pasep::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (args[0] is the program name), writing results to `out`
/// and diagnostics to `err`. Never throws; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pasep::cli
