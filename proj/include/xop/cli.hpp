#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNumerical = 2;

/// Inclusive integer range lo:hi[:step]; a single integer is a one-point
/// range. Throws InvalidParameter on malformed input.
std::vector<int> parse_range(const std::string& spec);
/// Comma-separated list of finite reals.
std::vector<double> parse_reals(const std::string& spec);

/// Runs one xop-kit command. `args` excludes the program name. CSV goes to
/// `out` (or the --output file), diagnostics to `err`. Returns 0, 1 for
/// invalid parameters or flags, 2 for numerical failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xop::cli
