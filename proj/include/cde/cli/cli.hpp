#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cde::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // some emitted check failed
inline constexpr int kUsage = 2;   // bad flags, bad input, or a library error

// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cde::cli
