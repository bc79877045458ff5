#include "sphtopo/legendre.hpp"

#include <cmath>
#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "sphtopo/errors.hpp"

namespace sphtopo {

namespace {

void check_argument(int ell, double x) {
  if (ell < 0) throw DomainError("legendre: negative degree " + std::to_string(ell));
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError("legendre: argument " + std::to_string(x) + " outside [-1, 1]");
  }
}

// Below this the sectoral seed has underflowed for all practical purposes;
// higher orders are flushed to zero instead of crawling through subnormals.
constexpr double kUnderflowFloor = 1e-280;

}  // namespace

double legendre(int ell, double x) {
  check_argument(ell, x);
  if (ell == 0) return 1.0;
  double p0 = 1.0;
  double p1 = x;
  for (int l = 1; l < ell; ++l) {
    const double p2 = ((2.0 * l + 1.0) * x * p1 - l * p0) / (l + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

std::vector<double> associated_legendre_band(int ell, double x) {
  check_argument(ell, x);
  std::vector<double> out(static_cast<std::size_t>(ell) + 1);
  LegendreRecurrence::for_degree(ell)->band(x, std::sqrt((1.0 - x) * (1.0 + x)), out);
  return out;
}

LegendreRecurrence::LegendreRecurrence(int ell) : ell_(ell) {
  if (ell < 0) throw DomainError("LegendreRecurrence: negative degree");
  const auto n = static_cast<std::size_t>(ell) + 1;
  diag_.assign(n, 0.0);
  first_.assign(n, 0.0);
  offset_.assign(n + 1, 0);
  up_.assign(n, 0.0);
  down_.assign(n, 0.0);
  for (int m = 0; m <= ell; ++m) {
    if (m > 0) diag_[m] = std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    first_[m] = std::sqrt(2.0 * m + 3.0);
    const double lm = static_cast<double>(ell);
    up_[m] = std::sqrt((lm - m) * (lm + m + 1.0));
    down_[m] = std::sqrt((lm + m) * (lm - m + 1.0));
    offset_[m + 1] = offset_[m] + static_cast<std::size_t>(std::max(0, ell - m - 1));
    for (int l = m + 2; l <= ell; ++l) {
      const double l2 = static_cast<double>(l) * l;
      const double m2 = static_cast<double>(m) * m;
      a_.push_back(std::sqrt((4.0 * l2 - 1.0) / (l2 - m2)));
      const double lp = l - 1.0;
      b_.push_back(std::sqrt((lp * lp - m2) / (4.0 * lp * lp - 1.0)));
    }
  }
}

std::shared_ptr<const LegendreRecurrence> LegendreRecurrence::for_degree(int ell) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const LegendreRecurrence>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[ell];
  if (!slot) slot = std::make_shared<const LegendreRecurrence>(ell);
  return slot;
}

void LegendreRecurrence::band(double x, double s, std::span<double> out) const {
  double pmm = 0.5 / std::sqrt(std::numbers::pi);
  for (int m = 0; m <= ell_; ++m) {
    if (m > 0) pmm *= -diag_[m] * s;
    if (std::abs(pmm) < kUnderflowFloor) {
      for (int k = m; k <= ell_; ++k) out[k] = 0.0;
      return;
    }
    if (m == ell_) {
      out[m] = pmm;
      break;
    }
    double p0 = pmm;
    double p1 = x * first_[m] * pmm;
    const double* a = a_.data() + offset_[m];
    const double* b = b_.data() + offset_[m];
    const int steps = ell_ - m - 1;
    for (int k = 0; k < steps; ++k) {
      const double p2 = a[k] * (x * p1 - b[k] * p0);
      p0 = p1;
      p1 = p2;
    }
    out[m] = p1;
  }
}

void LegendreRecurrence::ladder_derivative(std::span<const double> in,
                                           std::span<double> out) const {
  if (ell_ == 0) {
    out[0] = 0.0;
    return;
  }
  out[0] = up_[0] * in[1];
  for (int m = 1; m <= ell_; ++m) {
    const double next = (m < ell_) ? in[m + 1] : 0.0;
    out[m] = 0.5 * (up_[m] * next - down_[m] * in[m - 1]);
  }
}

void LegendreRecurrence::band_with_derivatives(double x, double s, std::span<double> value,
                                               std::span<double> d1,
                                               std::span<double> d2) const {
  band(x, s, value);
  ladder_derivative(value, d1);
  ladder_derivative(d1, d2);
}

}  // namespace sphtopo
