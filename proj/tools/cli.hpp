#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blocklang::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kEmptyLanguage = 2,
  kBudgetExceeded = 3,
  kCheckFailed = 4,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blocklang::cli
