#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrpair {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitChecksFailed = 1, kExitInputError = 2 };

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrpair
