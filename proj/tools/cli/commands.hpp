#pragma once

#include <string>
#include <vector>

namespace nagell::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kUnsupported = 3,
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one invocation; `args` excludes the program name.
/// Subcommands: theorem1, theorem2, solve, oracle, construct, table.
CommandResult run(const std::vector<std::string>& args);

}  // namespace nagell::cli
