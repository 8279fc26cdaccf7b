#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace simplicial::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 2,
    kNumericError = 3,
    kInsufficientDepth = 4,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` unless --out is given and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplicial::cli
