#pragma once

#include <memory>
#include <span>
#include <vector>

namespace sphtopo {

/// Legendre polynomial P_ell(x) by the three-term recurrence.
/// Throws DomainError for ell < 0 or |x| > 1.
double legendre(int ell, double x);

/// Fully normalized associated Legendre values for one degree.
///
/// Entry m (0 <= m <= ell) is
///   sqrt((2ell+1)/(4pi) * (ell-m)!/(ell+m)!) * P_ell^m(x)
/// including the Condon-Shortley phase, so that 2*pi times the integral over
/// [-1,1] of entry(ell,m) * entry(ell',m) is the Kronecker delta.
/// Throws DomainError for |x| > 1.
std::vector<double> associated_legendre_band(int ell, double x);

/// Precomputed recurrence coefficients for a fixed degree.
///
/// Normalization lives inside the recursion (no factorials are formed), which
/// keeps every intermediate bounded up to degree 200 and beyond. Instances
/// are immutable and shared across threads via for_degree().
class LegendreRecurrence {
 public:
  explicit LegendreRecurrence(int ell);

  /// Cached shared instance for `ell`.
  static std::shared_ptr<const LegendreRecurrence> for_degree(int ell);

  int degree() const noexcept { return ell_; }

  /// Values for m = 0..ell at colatitude with cos = x, sin = s (s >= 0).
  /// `out` must have ell+1 entries.
  void band(double x, double s, std::span<double> out) const;

  /// Values and first/second colatitude derivatives for m = 0..ell.
  ///
  /// Derivatives use the ladder relation
  ///   d/dtheta L_m = (c+_m L_{m+1} - c-_m L_{m-1}) / 2,
  /// which has no 1/sin(theta) factor and is exact at every colatitude.
  void band_with_derivatives(double x, double s, std::span<double> value,
                             std::span<double> d1, std::span<double> d2) const;

  /// Applies the ladder derivative operator: out = d/dtheta of the band whose
  /// values are `in`.
  void ladder_derivative(std::span<const double> in, std::span<double> out) const;

 private:
  int ell_;
  std::vector<double> diag_;       // sqrt((2m+1)/(2m)), m >= 1
  std::vector<double> first_;      // sqrt(2m+3)
  std::vector<std::size_t> offset_;
  std::vector<double> a_;          // packed by m, degrees m+2..ell
  std::vector<double> b_;
  std::vector<double> up_;         // sqrt((ell-m)(ell+m+1))
  std::vector<double> down_;       // sqrt((ell+m)(ell-m+1))
};

}  // namespace sphtopo
