#pragma once

#include <iosfwd>

namespace dcjmedian {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitInvalidInstance = 3,
  kExitBudget = 4,
  kExitInternal = 5,
};

/// Runs the `dcjmedian` command line (argv[0] is the program name).
/// `--input -` reads from `in`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dcjmedian
