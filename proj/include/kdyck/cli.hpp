#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdyck::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 1;
inline constexpr int exit_verification_failed = 2;
inline constexpr int exit_usage = 64;

// Runs one command line. `args` excludes the program name. `in` supplies batch
// input (one object per line) when no --steps/--sw/--file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kdyck::cli
