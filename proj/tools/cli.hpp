#pragma once

#include <ostream>
#include <span>
#include <string>

namespace cayley::cli {

/// Exit codes: 0 success, 1 usage or data error, 2 predicate checked false.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFalse = 2;

/// Runs one invocation. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
