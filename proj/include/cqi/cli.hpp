#pragma once

#include <iosfwd>

namespace cqi {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

// Entry point of the `cqi` tool, with the output streams injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cqi
