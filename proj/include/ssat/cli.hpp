#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssat {

inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitError = 1;

/// Entry point of the `ssat` command: solve, gen, bench and prob
/// subcommands. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace ssat
