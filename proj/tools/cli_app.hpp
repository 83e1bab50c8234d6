#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace clext::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kCheckFailure = 1;
inline constexpr int kUsageError = 2;

// Runs one command line (without the program name). Reports go to out,
// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clext::cli
