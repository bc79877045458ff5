#include "sphtopo/interval.hpp"

#include <algorithm>
#include <cmath>

#include "sphtopo/errors.hpp"
#include "sphtopo/format.hpp"

namespace sphtopo {

ThresholdInterval ThresholdInterval::make(double lower, double upper) {
  if (std::isnan(lower) || std::isnan(upper)) {
    throw DomainError("ThresholdInterval: NaN endpoint");
  }
  if (lower > upper) {
    throw DomainError("ThresholdInterval: lower endpoint exceeds upper endpoint");
  }
  return ThresholdInterval(lower, upper);
}

double ThresholdInterval::endpoint_distance(double x) const noexcept {
  double d = kInf;
  if (std::isfinite(lower_)) d = std::min(d, std::abs(x - lower_));
  if (std::isfinite(upper_)) d = std::min(d, std::abs(x - upper_));
  return d;
}

std::string ThresholdInterval::label() const {
  return format_real(lower_) + ":" + format_real(upper_);
}

ThresholdInterval ThresholdInterval::parse(const std::string& text) {
  if (text.empty()) throw IoError("interval: empty text");
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) {
    throw IoError("interval '" + text + "': expected lo:hi");
  }
  try {
    return make(parse_real(text.substr(0, colon)), parse_real(text.substr(colon + 1)));
  } catch (const DomainError& e) {
    throw IoError("interval '" + text + "': " + e.what());
  }
}

}  // namespace sphtopo
