#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcurve::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kIrregular = 3 };

/// Runs one command. `args` excludes the program name. Results go to `out` unless
/// --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcurve::cli
