#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoid_ramsey {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInternal = 1;  // internal error or a failed property suite
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

/// Runs the command-line front end. `args` excludes the program name.
/// Human-readable output (or the JSON document with --json) goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace monoid_ramsey
