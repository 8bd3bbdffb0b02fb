#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circledom::cli {

// Exit codes shared by every subcommand.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

// Runs one command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circledom::cli
