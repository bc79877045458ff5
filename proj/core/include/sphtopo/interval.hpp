#pragma once

#include <limits>
#include <string>

namespace sphtopo {

/// Closed interval [lower, upper] of the extended real line; either end may
/// be infinite. Defines the excursion set f^{-1}(I).
class ThresholdInterval {
 public:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  /// Throws DomainError on NaN endpoints or lower > upper.
  static ThresholdInterval make(double lower, double upper);
  /// [u, +inf)
  static ThresholdInterval half_line(double u) { return make(u, kInf); }
  static ThresholdInterval whole_line() { return make(-kInf, kInf); }

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  bool contains(double x) const noexcept { return x >= lower_ && x <= upper_; }
  bool is_upper_half_line() const noexcept { return upper_ == kInf && lower_ > -kInf; }

  /// Distance from `x` to the nearest finite endpoint (+inf if none).
  double endpoint_distance(double x) const noexcept;

  /// "lo:hi" with format_real endpoints, e.g. "1:inf".
  std::string label() const;
  /// Parses the label() form. Throws IoError.
  static ThresholdInterval parse(const std::string& text);

  friend bool operator==(const ThresholdInterval&, const ThresholdInterval&) = default;

 private:
  ThresholdInterval(double lower, double upper) : lower_(lower), upper_(upper) {}
  double lower_;
  double upper_;
};

}  // namespace sphtopo
