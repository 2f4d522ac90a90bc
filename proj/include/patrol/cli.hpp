#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace patrol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitLimitExceeded = 3;

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// as JSON; failures print {"error": ...} to `out` and a note to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace patrol::cli
