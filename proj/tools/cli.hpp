#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tepperlab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInputError = 2,
  kExitBudget = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tepperlab::cli
