#pragma once

#include <ostream>

namespace ybfuse::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kInternal = 3 };

// Entry point of the ybfuse command; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ybfuse::cli
