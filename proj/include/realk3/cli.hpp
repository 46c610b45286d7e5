#pragma once

#include <iosfwd>

namespace realk3 {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Largest g_max accepted by `verify --exact`.
inline constexpr int kExactVerifyLimit = 200;

/// Entry point of the `realk3` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace realk3
