#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mixsep::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;          // separated / equivalent / maximal / all axioms hold
inline constexpr int kNegative = 1;    // connected / different / not maximal / violation found
inline constexpr int kUsage = 2;       // bad arguments, unknown labels, invalid queries
inline constexpr int kSizeLimit = 3;
inline constexpr int kInputError = 4;  // unreadable or malformed files, class violations

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixsep::cli
