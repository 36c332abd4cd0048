#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kisinlab::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFalsified = 1;
inline constexpr int kUsage = 2;

// Subcommands: enumerate, components, verify-lemmas, path-check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace kisinlab::cli
