#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricbb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Runs one command line. args[0] is the program name. Reports go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricbb::cli
