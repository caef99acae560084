#pragma once

#include <string>
#include <vector>

namespace topoprobe::cli {

// Exit statuses: 0 success, 1 internal stage failure, 2 bad input or usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadInput = 2;

int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args[0] is the program name

}  // namespace topoprobe::cli
