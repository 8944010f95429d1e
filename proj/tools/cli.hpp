#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symbreak::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kInputError = 2,
  kBudget = 3,
  kUndefined = 4,
};

/// Runs the command line `args` (without the program name). Records and
/// results go to `out`, diagnostics to `err`; "-" graph arguments read `in`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace symbreak::cli
