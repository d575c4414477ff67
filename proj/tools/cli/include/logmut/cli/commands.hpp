#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logmut::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoOrParse = 1,
  kInvalidDatum = 2,
  kIllegalMutation = 3,
  kVerdictNo = 4,
  kVerdictUnknown = 5,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Everything is written to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logmut::cli
