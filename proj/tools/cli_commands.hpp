#pragma once

#include <ostream>

namespace efa::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // bad flags, unreadable or malformed input
  kPipeline = 2,  // the data cannot produce a valid contour or descriptor
  kInternal = 3,
};

/// Parses argv and runs one subcommand. Normal output goes to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace efa::cli
