#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nps::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nps::cli
