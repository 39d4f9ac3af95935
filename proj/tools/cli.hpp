#pragma once

#include <ostream>

namespace specflow::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadConfig = 2,
  kMissingFile = 3,
  kDiverged = 4,
  kIoFailure = 5,
};

/// Entry point of the `specflow` tool: run | study | spectrum | diag.
/// Failures print one line to `err`:
///   error code=<kind> key=<key> message="<text>"
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace specflow::cli
