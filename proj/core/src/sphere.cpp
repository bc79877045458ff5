#include "sphtopo/sphere.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sphtopo/errors.hpp"

namespace sphtopo {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SpherePoint SpherePoint::make(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw DomainError("SpherePoint: non-finite coordinate");
  }
  if (theta < 0.0 || theta > std::numbers::pi) {
    throw DomainError("SpherePoint: colatitude " + std::to_string(theta) +
                      " outside [0, pi]");
  }
  double wrapped = std::fmod(phi, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return SpherePoint(theta, wrapped);
}

SpherePoint SpherePoint::from_cartesian(const Vec3& v) {
  const double r = v.norm();
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("SpherePoint::from_cartesian: zero or non-finite vector");
  }
  const double rho = std::hypot(v.x(), v.y());
  const double theta = std::atan2(rho, v.z());
  const double phi = (rho == 0.0) ? 0.0 : std::atan2(v.y(), v.x());
  return make(theta, phi);
}

Vec3 SpherePoint::cartesian() const {
  const double st = std::sin(theta_);
  return {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
}

Vec3 SpherePoint::e_theta() const {
  const double ct = std::cos(theta_);
  return {ct * std::cos(phi_), ct * std::sin(phi_), -std::sin(theta_)};
}

Vec3 SpherePoint::e_phi() const { return {-std::sin(phi_), std::cos(phi_), 0.0}; }

double geodesic_distance(const Vec3& a, const Vec3& b) {
  // atan2 form stays accurate for nearly coincident and nearly antipodal pairs.
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

double geodesic_distance(const SpherePoint& a, const SpherePoint& b) {
  return geodesic_distance(a.cartesian(), b.cartesian());
}

Vec3 exponential_map(const Vec3& p, const Vec3& v) {
  const double t = v.norm();
  if (t == 0.0) return p;
  Vec3 q = std::cos(t) * p + (std::sin(t) / t) * v;
  return q.normalized();
}

Rotation Rotation::identity() { return Rotation(Eigen::Matrix3d::Identity()); }

Rotation Rotation::from_matrix(const Eigen::Matrix3d& m) {
  if (!m.allFinite()) throw DomainError("Rotation: non-finite matrix");
  const double orth = (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  if (orth > 1e-10) throw DomainError("Rotation: matrix is not orthogonal");
  if (std::abs(m.determinant() - 1.0) > 1e-10) {
    throw DomainError("Rotation: determinant is not +1");
  }
  return Rotation(m);
}

Rotation Rotation::about_axis(const Vec3& axis, double angle) {
  return Rotation(Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix());
}

Rotation Rotation::equator_to_north_pole() {
  Eigen::Matrix3d m;
  m << 0, 0, -1,
       0, 1, 0,
       1, 0, 0;
  return Rotation(m);
}

Rotation Rotation::equator_to_south_pole() { return equator_to_north_pole().inverse(); }

}  // namespace sphtopo
