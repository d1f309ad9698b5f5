#pragma once

#include <iosfwd>

namespace pfspec::cli {

enum ExitCode
{
    kExitOk = 0,
    kExitFailed = 1,   ///< ran to completion, but a comparison or check failed
    kExitUsage = 2,
    kExitNumerical = 3
};

/// Entry point shared by the executable and the tests.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pfspec::cli
