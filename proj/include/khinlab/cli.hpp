#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace khinlab::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInequalityViolated = 1,
    kDomainError = 2,
    kBudgetExceeded = 3,
    kParseError = 4,
};

/// Runs the command line `args` (without the program name). Documents go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace khinlab::cli
