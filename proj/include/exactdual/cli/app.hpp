#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exactdual::cli {

/// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInvalidElp = 3,
  kPrecondition = 4,
  kVerification = 5,
};

/// Runs the command line `args` (program name excluded), writing results to
/// `out` and diagnostics to `err`. Returns one of the ExitCode values.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace exactdual::cli
