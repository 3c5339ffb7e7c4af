#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arbor::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_exhausted = 2;
inline constexpr int exit_usage = 64;

/// Runs the `arbor` command line. `args` excludes the program name.
/// Reports go to `out`, help and error messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor::cli
