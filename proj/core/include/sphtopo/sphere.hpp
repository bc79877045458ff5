#pragma once

#include <Eigen/Core>

namespace sphtopo {

using Vec3 = Eigen::Vector3d;

/// Point on the unit sphere in colatitude/longitude coordinates.
///
/// Construct through make(), which validates finiteness and the colatitude
/// range and wraps the longitude into [0, 2*pi).
class SpherePoint {
 public:
  static SpherePoint make(double theta, double phi);
  static SpherePoint from_cartesian(const Vec3& v);

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

  Vec3 cartesian() const;
  /// Unit tangent along increasing colatitude.
  Vec3 e_theta() const;
  /// Unit tangent along increasing longitude.
  Vec3 e_phi() const;

 private:
  SpherePoint(double theta, double phi) : theta_(theta), phi_(phi) {}
  double theta_;
  double phi_;
};

double geodesic_distance(const SpherePoint& a, const SpherePoint& b);
double geodesic_distance(const Vec3& a, const Vec3& b);

/// Point reached by following the geodesic from `p` with initial tangent
/// `v` (ambient coordinates, v orthogonal to p) for arc length |v|.
Vec3 exponential_map(const Vec3& p, const Vec3& v);

/// Proper rotation of R^3 (orthogonal, determinant +1).
class Rotation {
 public:
  static Rotation identity();
  /// Throws DomainError unless `m` is orthogonal with det +1 to 1e-10.
  static Rotation from_matrix(const Eigen::Matrix3d& m);
  /// Rotation by `angle` radians about the (normalized) `axis`.
  static Rotation about_axis(const Vec3& axis, double angle);

  /// Rotation carrying the equatorial point (1,0,0) to the north pole.
  static Rotation equator_to_north_pole();
  /// Rotation carrying the equatorial point (1,0,0) to the south pole.
  static Rotation equator_to_south_pole();

  const Eigen::Matrix3d& matrix() const noexcept { return m_; }
  Vec3 apply(const Vec3& v) const { return m_ * v; }
  Rotation inverse() const { return Rotation(m_.transpose()); }

 private:
  explicit Rotation(const Eigen::Matrix3d& m) : m_(m) {}
  Eigen::Matrix3d m_;
};

}  // namespace sphtopo
