#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace priorforge::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kNotionFails = 3,
    kVerificationFailure = 4,
};

/// Runs the prior-forge command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace priorforge::cli
