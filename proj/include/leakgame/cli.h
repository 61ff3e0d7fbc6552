#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leakgame::cli {

// Exit codes of every command.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kNumericalError = 3,
};

// Runs one command line (args excludes the program name). The JSON payload
// goes to `out`; diagnostics and text renderings go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leakgame::cli
