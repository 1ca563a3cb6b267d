#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;       // success / SPC verdict
inline constexpr int kExitNegative = 1; // valid run, negative verdict
inline constexpr int kExitUsage = 2;    // usage, parse or input error

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spc::cli
