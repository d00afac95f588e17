// SPDX-License-Identifier: Apache-2.0

#ifndef RAMCONG_CLI_HPP
#define RAMCONG_CLI_HPP

#include <iosfwd>

namespace ramcong {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Entry point of the `ramcong` tool. Writes results to `out` and diagnostics
/// to `err`; returns the process exit code (0 ok, 1 usage or domain error,
/// 2 verification mismatch or failed internal identity).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramcong

#endif  // RAMCONG_CLI_HPP
