#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlbif::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNonConvergence = 3;

/// Runs one subcommand (ground, profile, branches, threshold, sweep, asympt, verify).
/// `args` excludes the program name. Results go to `out` unless --out names a file;
/// diagnostics go to `err` as one JSON object per line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlbif::cli
