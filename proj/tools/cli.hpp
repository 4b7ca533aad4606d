#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irreg::cli {

/// Exit codes: 0 pass, 1 violations, 2 input error, 3 capability error.
enum ExitCode : int { kOk = 0, kViolations = 1, kInputError = 2, kCapabilityError = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace irreg::cli
