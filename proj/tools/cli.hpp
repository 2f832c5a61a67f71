#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cone_runge::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kSelftestFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kNotNested = 3;
inline constexpr int kParityViolation = 4;

// args excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cone_runge::cli
