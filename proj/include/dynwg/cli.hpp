#pragma once

#include <iosfwd>

namespace dynwg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the dynwg command line tool. Subcommands: op, verify,
/// cache, rep-info. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dynwg
