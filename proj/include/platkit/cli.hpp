#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace platkit {

/// Exit codes of the platkit command line.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyViolated = 1,
  kExitUsage = 2,
};

/// Runs the command line with args excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace platkit
