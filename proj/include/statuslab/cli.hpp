#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace statuslab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`; "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace statuslab::cli
