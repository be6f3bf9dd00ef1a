#pragma once

#include <iosfwd>

namespace fparadox {

/// Exit codes of the command-line driver.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2 };

/// Runs the command-line driver. Subcommands: predict, sweep, experiment,
/// generate, analyze. Results go to `out` (or --out), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fparadox
