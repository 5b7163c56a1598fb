#pragma once

#include <iosfwd>

namespace ric::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Entry point of the `ric` tool, separated from main() for testing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ric::cli
