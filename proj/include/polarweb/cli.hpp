#pragma once

// The polarweb command line.

#include <ostream>
#include <string>
#include <vector>

namespace polarweb {

/// Exit codes of run_command.
enum ExitCode : int {
  kExitPass = 0,
  kExitAssertion = 1,
  kExitUsage = 2,
  kExitNumeric = 3,
};

/// Runs one subcommand; `args` excludes the program name. The report goes to
/// `out`, warnings and diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarweb
