#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilorb::cli {

enum ExitCode : int {
    kOk = 0,
    kFailed = 1,        // a recheck rejected a certificate
    kInconclusive = 2,
    kUsage = 3,
    kBudget = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilorb::cli
