#pragma once

#include <exception>
#include <iosfwd>

namespace cuspkit {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitVerifyFailed = 3,
  kExitInvariant = 4,
  kExitUnsupported = 5,
};

// Entry point of the cuspkit command line tool. Reports go to `out` (unless --output names a
// file), diagnostics to `err`.
// Exit status for an exception escaping a command: InvariantViolation and anything unexpected map
// to kExitInvariant, UnsupportedError to kExitUnsupported, the other library errors to kExitUsage.
int exit_code_for(const std::exception& e);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cuspkit
