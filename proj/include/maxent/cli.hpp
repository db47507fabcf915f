#pragma once
#include <iosfwd>

namespace maxent::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalid = 2,
  kIo = 3,
  kConfig = 4,
};

/// Parses the command line and runs one subcommand, writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace maxent::cli
