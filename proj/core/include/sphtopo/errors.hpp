#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sphtopo {

/// Argument outside the mathematical domain of an operation (e.g. |x| > 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Analytic-chart evaluation requested inside a polar exclusion cap.
class PoleProximityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Successive quadrature refinements disagreed beyond tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A critical point with a (numerically) singular Hessian was found; the
/// sample is not Morse at the working tolerance.
class NonMorseError : public std::runtime_error {
 public:
  NonMorseError(std::uint64_t seed, const std::string& what)
      : std::runtime_error(what), seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

/// The critical-point search failed the global Morse check
/// (maxima - saddles + minima != 2) even after lattice refinement.
class CompletenessError : public std::runtime_error {
 public:
  CompletenessError(std::uint64_t seed, const std::string& what)
      : std::runtime_error(what), seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Malformed input file or unreadable/unwritable path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sphtopo
