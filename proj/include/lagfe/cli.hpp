#pragma once

#include <ostream>

namespace lagfe {

// Exit statuses of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Subcommands: indices, nodes, shape, verify, orders. Writes to the given
/// streams instead of std::cout/std::cerr so it can be driven in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lagfe
