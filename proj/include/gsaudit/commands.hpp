#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsaudit {

enum ExitCode : int { kExitClean = 0, kExitViolations = 1, kExitInputError = 2 };

/// Entry point of the `gsaudit` tool. `args` excludes the program name.
/// Subcommands: audit, bound, optimize, asymptote, prop1-check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsaudit
