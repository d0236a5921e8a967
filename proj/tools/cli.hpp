#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fpa::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2, kSuiteFailure = 3 };

/// Runs one subcommand. `args` excludes the program name. The JSON document
/// goes to `out`; usage text and parse errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpa::cli
