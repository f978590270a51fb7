#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistsum::cli {

/// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_computation = 1;
inline constexpr int exit_usage = 2;

/// Parses args (without the program name), dispatches to the subcommand and writes
/// its result to out (or to --out FILE). Usage errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace twistsum::cli
