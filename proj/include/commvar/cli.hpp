#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace commvar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failed or an engine invariant broke
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commvar::cli
