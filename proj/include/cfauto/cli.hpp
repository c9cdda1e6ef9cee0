#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfauto {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitNoRelation = 3,
};

// Runs one command (arguments without the program name). Results go to
// `out`; diagnostics go to `err` as a single "error: <Reason>: detail" line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfauto
