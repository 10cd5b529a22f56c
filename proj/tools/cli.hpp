#ifndef LAZYBURN_TOOLS_CLI_HPP
#define LAZYBURN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lazyburn::cli {

/// Process exit codes.
enum ExitCode : int {
  ok = 0,
  verification_false = 1,
  usage = 2,
  parse_failure = 3,
  limit_exceeded = 4,
};

/// Runs one command line (without the program name) and returns its exit
/// code. All output goes to `out` and diagnostics to `err`, so the whole
/// interface can be driven in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lazyburn::cli

#endif  // LAZYBURN_TOOLS_CLI_HPP
