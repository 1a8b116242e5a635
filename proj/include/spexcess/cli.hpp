#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spexcess::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNumericalError = 3,
  kInvariantViolated = 4,
};

/// Runs the command line `spexcess <args...>`; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spexcess::cli
