#pragma once

#include <string>
#include <vector>

namespace singlattice::cli {

enum ExitCode : int {
  ok = 0,
  condition_fails = 1,
  parse_error = 2,
  validation_error = 3,
  precondition_error = 4,
  invariant_violation = 5,
};

struct CommandResult {
  int exit_code = ok;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name).
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace singlattice::cli
