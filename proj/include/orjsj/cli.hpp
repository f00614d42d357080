#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orjsj::cli {

// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kParseError = 2,
  kInapplicable = 3,
};

// Runs the command line (args excludes the program name). Diagnostics go to
// err; results go to out unless --out redirects them.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace orjsj::cli
