#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbor {

enum ExitCode : int {
  kExitOk = 0,
  kExitBadInput = 1,
  kExitGuardRefusal = 2,
  kExitInternal = 3,
};

/// Runs the command line `args` (args[0] is the program name). Input "-"
/// reads `in`.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace arbor
