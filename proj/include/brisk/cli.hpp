#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brisk {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotSpecial = 1,
  kExitInput = 2,
  kExitInternal = 3,
};

/// Runs the command line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding the bundled presentation files.
std::string fixture_dir();

}  // namespace brisk
