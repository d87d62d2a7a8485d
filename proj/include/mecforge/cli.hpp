#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mecforge::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         ///< no subcommand / --help style problems
  kInvalid = 2,       ///< bad parameters or malformed input
  kIo = 3,            ///< file could not be read or written
  kUnsupported = 4,   ///< a metric does not apply; the rest of the report is still written
  kTooLarge = 5,      ///< range too large for exhaustive mode
};

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics and provenance to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mecforge::cli
