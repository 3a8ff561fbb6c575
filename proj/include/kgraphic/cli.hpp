#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgraphic {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitAffirmative = 0,  // potentially / graphic / sweep clean
  kExitNegative = 1,     // not potentially / not graphic / mismatches found
  kExitError = 2,        // parse error, out of scope, budget exceeded
};

/// Runs one command line (args[0] is the program name). Structured output goes
/// to `out` as JSON lines, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgraphic
