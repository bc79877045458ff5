#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace sphtopo::quadrature {

/// Gauss rule; for Hermite rules the weights integrate against the standard
/// normal density and sum to one.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point probabilists' Gauss-Hermite rule by the Golub-Welsch eigenvalue
/// method. Cached; safe to call concurrently.
const GaussRule& gauss_hermite(int n);

/// Integral over R^D of `integrand(x)` by an n^D tensor Gauss-Hermite rule
/// centred at `center`: each node z of the standard-normal rule is mapped to
/// x = center + z and the integrand is divided by the normal weight there.
template <std::size_t D, class F>
double hermite_tensor(int n, const std::array<double, D>& center, F&& integrand) {
  const GaussRule& rule = gauss_hermite(n);
  const double norm = std::pow(2.0 * std::numbers::pi, 0.5 * static_cast<double>(D));
  std::array<int, D> idx{};
  std::array<double, D> x{};
  double total = 0.0;
  for (;;) {
    double w = norm;
    double z2 = 0.0;
    for (std::size_t d = 0; d < D; ++d) {
      const double z = rule.nodes[idx[d]];
      w *= rule.weights[idx[d]];
      z2 += z * z;
      x[d] = center[d] + z;
    }
    total += w * std::exp(0.5 * z2) * integrand(x);
    std::size_t d = 0;
    for (; d < D; ++d) {
      if (++idx[d] < n) break;
      idx[d] = 0;
    }
    if (d == D) break;
  }
  return total;
}

}  // namespace sphtopo::quadrature
