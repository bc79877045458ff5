#include "sphtopo/rng.hpp"

#include <cmath>
#include <numbers>

namespace sphtopo::rng {

double gaussian(std::uint64_t key, int ell, int m) noexcept {
  const std::uint64_t counter =
      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ell)) << 32) |
      static_cast<std::uint32_t>(m);
  const std::uint64_t h = combine(key, counter);
  // Box-Muller on two independent words; only the cosine branch is used so
  // that each (key, ell, m) maps to exactly one variate.
  const double u1 = to_open_unit(mix64(h ^ 0xa0761d6478bd642fULL));
  const double u2 = to_open_unit(mix64(h ^ 0xe7037ed1a0b428dbULL));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace sphtopo::rng
