#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sphtopo/interval.hpp"

namespace sphtopo::cli {

enum ExitCode : int { kSuccess = 0, kRuntimeFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Threshold list: comma-separated reals and "a:b:step" ranges (inclusive),
/// each giving the half-line [u, inf). Throws std::invalid_argument.
std::vector<double> parse_thresholds(const std::string& text);

/// Comma-separated "lo:hi" intervals; "-inf" and "inf" allowed.
/// Throws std::invalid_argument.
std::vector<ThresholdInterval> parse_intervals(const std::string& text);

}  // namespace sphtopo::cli
