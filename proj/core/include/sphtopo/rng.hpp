#pragma once

#include <cstdint>

namespace sphtopo::rng {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Order-sensitive combination of two words into one well-mixed word.
constexpr std::uint64_t combine(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(mix64(a) ^ (b + 0x632be59bd9b4e019ULL + (a << 6) + (a >> 2)));
}

/// Seed of the i-th ensemble member derived from a base seed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return combine(base ^ 0x5851f42d4c957f2dULL, index);
}

/// Uniform double in the open interval (0, 1) from the top 52 bits of a word.
constexpr double to_open_unit(std::uint64_t bits) noexcept {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

/// Standard normal variate that is a pure function of (key, ell, m).
///
/// Counter-based: no generator state is carried between draws, so any
/// coefficient can be produced independently and in any order.
double gaussian(std::uint64_t key, int ell, int m) noexcept;

}  // namespace sphtopo::rng
