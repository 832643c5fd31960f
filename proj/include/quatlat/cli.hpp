#pragma once

#include <iosfwd>

namespace quatlat {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,       ///< a fixture check failed
  kExitConfig = 2,        ///< usage, config or invalid-input error
  kExitUnsupported = 3,
  kExitResource = 4,      ///< enumeration budget exceeded
  kExitInternal = 5,
};

/// Entry point of the quatlat tool: parses argv, runs one subcommand,
/// writes the report to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quatlat
