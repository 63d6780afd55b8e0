#pragma once

#include <ostream>

namespace gradeforge::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kBudgetExhausted = 2,
  kParseFailure = 3,
};

/// Runs one invocation. Results go to `out`, diagnostics to `err`.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gradeforge::cli
