#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hserre::cli {

/// Exit codes: the checked property holds (or the computation finished),
/// the property is refuted, or the invocation/input was bad.
inline constexpr int kHolds = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hserre::cli
