#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diagrw {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,  // also parse and resolution errors, unreadable files
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagrw
