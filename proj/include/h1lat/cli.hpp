#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h1lat {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitSearchExhausted = 2,
  kExitVerificationFailed = 3,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace h1lat
