#include "sphtopo/harmonics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "sphtopo/errors.hpp"
#include "sphtopo/rng.hpp"

namespace sphtopo {

namespace {

// Chart partial derivatives of f in (theta, phi).
struct ChartDerivatives {
  double f = 0, f_t = 0, f_p = 0, f_tt = 0, f_tp = 0, f_pp = 0;
};

ChartDerivatives chart_derivatives(const RandomEigenfunction& field, double theta, double phi) {
  const int ell = field.degree();
  const auto n = static_cast<std::size_t>(ell) + 1;
  std::vector<double> buffer(3 * n);
  std::span<double> v(buffer.data(), n), d1(buffer.data() + n, n), d2(buffer.data() + 2 * n, n);
  field.recurrence().band_with_derivatives(std::cos(theta), std::sin(theta), v, d1, d2);

  const auto cw = field.cos_weights();
  const auto sw = field.sin_weights();
  const double c1 = std::cos(phi), s1 = std::sin(phi);
  double cm = 1.0, sm = 0.0;
  ChartDerivatives out;
  for (int m = 0; m <= ell; ++m) {
    const double even = cw[m] * cm + sw[m] * sm;   // multiplies L_m
    const double odd = -cw[m] * sm + sw[m] * cm;   // d/dphi of even, over m
    out.f += v[m] * even;
    out.f_t += d1[m] * even;
    out.f_tt += d2[m] * even;
    out.f_p += m * v[m] * odd;
    out.f_tp += m * d1[m] * odd;
    out.f_pp -= static_cast<double>(m) * m * v[m] * even;
    const double cn = cm * c1 - sm * s1;
    sm = sm * c1 + cm * s1;
    cm = cn;
  }
  return out;
}

}  // namespace

double pole_cap_radius(int ell) { return 0.2 / static_cast<double>(ell); }

bool in_pole_cap(int ell, const SpherePoint& p) {
  const double eps = pole_cap_radius(ell);
  return p.theta() < eps || p.theta() > std::numbers::pi - eps;
}

RandomEigenfunction::RandomEigenfunction(int ell, std::uint64_t seed,
                                         std::vector<double> coefficients)
    : ell_(ell), seed_(seed), coefficients_(std::move(coefficients)) {
  if (ell < 1) throw DomainError("RandomEigenfunction: degree must be >= 1");
  if (coefficients_.size() != static_cast<std::size_t>(2 * ell + 1)) {
    throw DomainError("RandomEigenfunction: expected " + std::to_string(2 * ell + 1) +
                      " coefficients, got " + std::to_string(coefficients_.size()));
  }
  recurrence_ = LegendreRecurrence::for_degree(ell);
  // sqrt(4pi) converts the area-normalized basis to the probability-normalized
  // one; (2ell+1)^{-1/2} is the variance scaling of the model.
  const double scale = std::sqrt(4.0 * std::numbers::pi / (2.0 * ell + 1.0));
  cos_weight_.assign(static_cast<std::size_t>(ell) + 1, 0.0);
  sin_weight_.assign(static_cast<std::size_t>(ell) + 1, 0.0);
  cos_weight_[0] = scale * coefficients_[ell];
  for (int m = 1; m <= ell; ++m) {
    cos_weight_[m] = scale * std::numbers::sqrt2 * coefficients_[ell + m];
    sin_weight_[m] = scale * std::numbers::sqrt2 * coefficients_[ell - m];
  }
}

double RandomEigenfunction::value(const SpherePoint& p) const {
  const auto n = static_cast<std::size_t>(ell_) + 1;
  std::vector<double> v(n);
  recurrence_->band(std::cos(p.theta()), std::sin(p.theta()), v);
  const double c1 = std::cos(p.phi()), s1 = std::sin(p.phi());
  double cm = 1.0, sm = 0.0, f = 0.0;
  for (int m = 0; m <= ell_; ++m) {
    f += v[m] * (cos_weight_[m] * cm + sin_weight_[m] * sm);
    const double cn = cm * c1 - sm * s1;
    sm = sm * c1 + cm * s1;
    cm = cn;
  }
  return f;
}

double RandomEigenfunction::value(const Vec3& unit) const {
  return value(SpherePoint::from_cartesian(unit));
}

RandomEigenfunction synthesize(int ell, std::uint64_t seed) {
  if (ell < 1) throw DomainError("synthesize: degree must be >= 1");
  std::vector<double> a(static_cast<std::size_t>(2 * ell + 1));
  for (int m = -ell; m <= ell; ++m) a[m + ell] = rng::gaussian(seed, ell, m);
  return RandomEigenfunction(ell, seed, std::move(a));
}

double theoretical_covariance(int ell, const SpherePoint& x, const SpherePoint& y) {
  const double c = std::cos(geodesic_distance(x, y));
  return legendre(ell, std::clamp(c, -1.0, 1.0));
}

Jet2 evaluate_jet(const RandomEigenfunction& field, const SpherePoint& p) {
  if (in_pole_cap(field.degree(), p)) {
    throw PoleProximityError("evaluate_jet: colatitude " + std::to_string(p.theta()) +
                             " inside polar cap of radius " +
                             std::to_string(pole_cap_radius(field.degree())));
  }
  const ChartDerivatives d = chart_derivatives(field, p.theta(), p.phi());
  const double st = std::sin(p.theta());
  const double cot = std::cos(p.theta()) / st;
  Jet2 jet;
  jet.value = d.f;
  jet.gradient << d.f_t, d.f_p / st;
  const double h12 = (d.f_tp - cot * d.f_p) / st;
  jet.hessian << d.f_tt, h12,
                 h12, d.f_pp / (st * st) + cot * d.f_t;
  return jet;
}

Jet2 geodesic_difference_jet(const RandomEigenfunction& field, const SpherePoint& p,
                             const Rotation& rotation, double step, int stencil) {
  if (!(step > 0.0)) throw DomainError("geodesic_difference_jet: step must be positive");
  if (stencil != 2 && stencil != 6) {
    throw DomainError("geodesic_difference_jet: stencil must be 2 or 6");
  }
  const Vec3 x = p.cartesian();
  const Vec3 e1 = p.e_theta();
  const Vec3 e2 = p.e_phi();
  auto g = [&](const Vec3& y) { return field.value(rotation.apply(y)); };
  const double g0 = g(x);

  // First and second derivative of t -> g(cos t x + sin t u) at t = 0.
  auto along = [&](const Vec3& u) {
    auto at = [&](double t) { return g(std::cos(t) * x + std::sin(t) * u); };
    if (stencil == 2) {
      const double fp = at(step), fm = at(-step);
      return std::array<double, 2>{(fp - fm) / (2.0 * step),
                                   (fp - 2.0 * g0 + fm) / (step * step)};
    }
    std::array<double, 7> f{};
    for (int k = -3; k <= 3; ++k) f[k + 3] = (k == 0) ? g0 : at(k * step);
    const double d1 = (-f[0] + 9.0 * f[1] - 45.0 * f[2] + 45.0 * f[4] - 9.0 * f[5] + f[6]) /
                      (60.0 * step);
    const double d2 = (2.0 * f[0] - 27.0 * f[1] + 270.0 * f[2] - 490.0 * f[3] + 270.0 * f[4] -
                       27.0 * f[5] + 2.0 * f[6]) /
                      (180.0 * step * step);
    return std::array<double, 2>{d1, d2};
  };

  const auto a1 = along(e1);
  const auto a2 = along(e2);
  const auto ap = along((e1 + e2) / std::numbers::sqrt2);
  const auto am = along((e1 - e2) / std::numbers::sqrt2);

  Jet2 jet;
  jet.value = g0;
  jet.gradient << a1[0], a2[0];
  const double h12 = 0.5 * (ap[1] - am[1]);
  jet.hessian << a1[1], h12,
                 h12, a2[1];
  return jet;
}

Jet2 evaluate_jet_rotated(const RandomEigenfunction& field, const SpherePoint& p,
                          const Rotation& rotation) {
  return geodesic_difference_jet(field, p, rotation, 0.05 / field.degree(), 6);
}

}  // namespace sphtopo
