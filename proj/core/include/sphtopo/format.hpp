#pragma once

#include <string>

namespace sphtopo {

/// Shortest text that reads back to at most 17 significant digits, '.'
/// decimal separator, "inf"/"-inf"/"nan" for non-finite values.
std::string format_real(double x);

/// Inverse of format_real; also accepts "+inf", "infinity" and "-infinity".
/// Throws IoError on malformed text.
double parse_real(const std::string& text);

}  // namespace sphtopo
