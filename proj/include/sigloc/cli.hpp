#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigloc::cli {

/// Exit codes: 0 success / all checks pass; 1 a mathematical check failed
/// (not rigid, vanishing violated, expected-value mismatch); 2 invalid input
/// or usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigloc::cli
