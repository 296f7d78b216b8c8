#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lyndon_slp::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kInternalError = 2,
    kVerifyFailed = 3,
};

/// Runs the command line `args` (without the program name). The seed falls
/// back to the LYNDON_SEED environment variable when --seed is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace lyndon_slp::cli
