#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sphtopo/legendre.hpp"
#include "sphtopo/sphere.hpp"

namespace sphtopo {

/// Value, frame gradient and covariant frame Hessian of a field at a point.
///
/// The frame is orthonormal; for the analytic chart it is (e_theta, e_phi).
struct Jet2 {
  double value = 0.0;
  Eigen::Vector2d gradient = Eigen::Vector2d::Zero();
  Eigen::Matrix2d hessian = Eigen::Matrix2d::Zero();
};

/// Half-angle of the polar exclusion caps for degree `ell` (0.2 / ell).
double pole_cap_radius(int ell);

/// True when `p` lies inside one of the two polar caps for degree `ell`.
bool in_pole_cap(int ell, const SpherePoint& p);

/// Random spherical eigenfunction of degree ell with unit pointwise variance:
///
///   f(x) = (2ell+1)^{-1/2} sum_m a_m Y_m(x),   a_m i.i.d. N(0,1),
///
/// using the real harmonic basis normalized against the uniform probability
/// measure on the sphere (so E f(x)^2 = 1 and E f(x)f(y) = P_ell(cos d)).
/// Coefficient index k = m + ell, with m > 0 the cos(m phi) terms and m < 0
/// the sin(|m| phi) terms. Immutable after construction.
class RandomEigenfunction {
 public:
  /// Throws DomainError unless ell >= 1 and coefficients.size() == 2ell+1.
  RandomEigenfunction(int ell, std::uint64_t seed, std::vector<double> coefficients);

  int degree() const noexcept { return ell_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::span<const double> coefficients() const noexcept { return coefficients_; }

  /// f at an arbitrary point (poles included).
  double value(const SpherePoint& p) const;
  double value(const Vec3& unit) const;

  /// Cos/sin weights per order m (sqrt(2)-normalized and variance-scaled).
  std::span<const double> cos_weights() const noexcept { return cos_weight_; }
  std::span<const double> sin_weights() const noexcept { return sin_weight_; }
  const LegendreRecurrence& recurrence() const noexcept { return *recurrence_; }

 private:
  int ell_;
  std::uint64_t seed_;
  std::vector<double> coefficients_;
  std::vector<double> cos_weight_;
  std::vector<double> sin_weight_;
  std::shared_ptr<const LegendreRecurrence> recurrence_;
};

/// Draws the 2ell+1 coefficients from the counter-based generator keyed by
/// (seed, ell, m). Throws DomainError for ell < 1.
RandomEigenfunction synthesize(int ell, std::uint64_t seed);

/// Covariance implied by the addition theorem: P_ell(cos d(x, y)).
double theoretical_covariance(int ell, const SpherePoint& x, const SpherePoint& y);

/// Analytic 2-jet in the (e_theta, e_phi) frame, including the cot(theta)
/// and sin(theta)cos(theta) Christoffel corrections.
///
/// Throws PoleProximityError when `p` lies inside a polar cap; use
/// evaluate_jet_rotated there.
Jet2 evaluate_jet(const RandomEigenfunction& field, const SpherePoint& p);

/// 2-jet of x -> f(R x) at `p`, in the (e_theta, e_phi) frame of `p`, by
/// sixth-order central differences along geodesics through `p`.
Jet2 evaluate_jet_rotated(const RandomEigenfunction& field, const SpherePoint& p,
                          const Rotation& rotation);

/// Same finite-difference construction with an explicit geodesic step;
/// stencil = 2 for second-order, 6 for sixth-order central differences.
Jet2 geodesic_difference_jet(const RandomEigenfunction& field, const SpherePoint& p,
                             const Rotation& rotation, double step, int stencil);

}  // namespace sphtopo
