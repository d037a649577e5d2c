#pragma once

#include <ostream>

namespace fgkit::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// Runs one command line. Boolean commands exit 0 for true and 1 for false.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fgkit::cli
