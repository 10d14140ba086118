#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ghs::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidMetric = 2,
    kIoError = 3,
    kTooLarge = 4,
    kOracleMismatch = 5,
};

struct Environment {
    std::optional<std::string> cap;  // value of GH_SIMPLEX_CAP, if set
};

/// Runs the `ghsimplex` command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace ghs::cli
