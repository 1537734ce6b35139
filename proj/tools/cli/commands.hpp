#pragma once

#include <ostream>

namespace holodual::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitNumerical = 3;

/// Parses argv, runs one verb, writes the report to out (or --out) and
/// diagnostics to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holodual::cli
