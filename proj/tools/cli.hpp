#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mixedwitt::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kBudget = 3, kParse = 4 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixedwitt::cli
