#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ramanujan::cli {

// Exit codes shared by every subcommand.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInternal = 3;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramanujan::cli
