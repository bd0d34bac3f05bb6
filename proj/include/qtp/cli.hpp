#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtp {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitInput = 2,
  kExitNonConvergence = 3,
  kExitNonGeneric = 4,
};

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtp
