#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mlde {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailure = 2,
    kExitUsage = 3,
    kExitInsufficientOrder = 4,
};

// Entry point of the `mlde` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlde
