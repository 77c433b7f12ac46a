#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isk4::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 2;  // campaign found a failure (witness emitted)
inline constexpr int kExitBudget = 3;     // some search ran out of budget
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataErr = 65;
inline constexpr int kExitSoftware = 70;

/// Default seed for campaign subcommands.
inline constexpr unsigned long long kDefaultSeed = 20160101ULL;

/// Runs the tool. `args` excludes the program name. Machine-readable output
/// goes to `out` (or the --output file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace isk4::cli
