#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sphtopo::analytic {

/// One row of the analytic identity suite.
struct IdentityCheck {
  std::string name;
  double max_error = 0.0;  // absolute, or relative for names ending in "_rel"
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs every closed-form vs. quadrature and algebraic cross-identity check
/// over fixed grids plus `random_cases` randomly drawn parameters.
std::vector<IdentityCheck> run_identity_suite(std::uint64_t seed = 20240607,
                                              int random_cases = 64);

/// CSV: check_name,max_abs_error,tolerance,status
void write_identity_csv(std::ostream& out, const std::vector<IdentityCheck>& checks);

}  // namespace sphtopo::analytic
