#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ietsaf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitCapExceeded = 3;

/// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ietsaf::cli
