#include "sphtopo/identity_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>

#include "sphtopo/analytic.hpp"
#include "sphtopo/format.hpp"

namespace sphtopo::analytic {

namespace {

class Tracker {
 public:
  Tracker(std::string name, double tolerance) : row_{std::move(name), 0.0, tolerance, true} {}
  void observe(double error) {
    if (!std::isfinite(error)) {
      row_.max_error = std::numeric_limits<double>::infinity();
    } else {
      row_.max_error = std::max(row_.max_error, error);
    }
  }
  IdentityCheck finish() {
    row_.passed = row_.max_error <= row_.tolerance;
    return row_;
  }

 private:
  IdentityCheck row_;
};

double relative(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

ThresholdInterval random_interval(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> end(-4.0, 4.0);
  std::uniform_int_distribution<int> kind(0, 3);
  const double a = end(gen), b = end(gen);
  switch (kind(gen)) {
    case 0: return ThresholdInterval::half_line(a);
    case 1: return ThresholdInterval::make(-ThresholdInterval::kInf, a);
    case 2: return ThresholdInterval::whole_line();
    default: return ThresholdInterval::make(std::min(a, b), std::max(a, b));
  }
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(std::uint64_t seed, int random_cases) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> tdist(-3.0, 3.0);
  std::uniform_real_distribution<double> udist(-4.0, 4.0);
  std::uniform_int_distribution<int> ldist(1, 200);

  std::vector<double> grid;
  for (int k = 0; k <= 12; ++k) grid.push_back(-3.0 + 0.5 * k);
  std::vector<double> ts = grid;
  for (int k = 0; k < random_cases / 4; ++k) ts.push_back(tdist(gen));

  std::vector<IdentityCheck> out;

  {
    Tracker p1("p1_closed_vs_quadrature", 1e-7), p2("p2_closed_vs_quadrature", 1e-7),
        g3("g3_identity_vs_quadrature", 1e-7);
    for (double t : ts) {
      p1.observe(std::abs(p1_closed(t) - p1_quadrature(t)));
      p2.observe(std::abs(p2_closed(t) - p2_quadrature(t)));
      g3.observe(std::abs(g3_identity(t) - g3_quadrature(t)));
    }
    out.push_back(p1.finish());
    out.push_back(p2.finish());
    out.push_back(g3.finish());
  }
  {
    Tracker g2("g2_identity_vs_quadrature", 1e-7);
    const double five[] = {-3.0, -1.5, 0.0, 1.5, 3.0};
    for (double a : five) {
      for (double b : five) g2.observe(std::abs(g2_identity(a, b) - g2_quadrature(a, b)));
    }
    for (int k = 0; k < 3; ++k) {
      const double a = tdist(gen), b = tdist(gen);
      g2.observe(std::abs(g2_identity(a, b) - g2_quadrature(a, b)));
    }
    out.push_back(g2.finish());
  }
  {
    Tracker simplify("combined_coefficient_vs_kernel_product", 1e-10);
    Tracker chain("quarter_cube_combined_vs_leading_covariance_rel", 1e-12);
    Tracker schwarz("covariance_squared_vs_variance_product_rel", 1e-12);
    for (int k = 0; k < random_cases; ++k) {
      const auto i1 = random_interval(gen);
      const auto i2 = random_interval(gen);
      const int ell = ldist(gen);
      const double cc = combined_coefficient(i1, i2);
      simplify.observe(std::abs(cc - interval_weight(i1) * interval_weight(i2) /
                                         (2.0 * std::numbers::pi)));
      const double l3 = std::pow(static_cast<double>(ell), 3);
      const double cov = leading_covariance(ell, i1, i2);
      if (cov != 0.0) chain.observe(relative(0.25 * l3 * cc, cov));
      const double v1 = leading_covariance(ell, i1, i1), v2 = leading_covariance(ell, i2, i2);
      schwarz.observe(relative(cov * cov, v1 * v2));
    }
    out.push_back(simplify.finish());
    out.push_back(chain.finish());
    out.push_back(schwarz.finish());
  }
  {
    Tracker hermite_form("hermite_variance_vs_integral_variance_rel", 1e-12);
    Tracker lkc("lkc0_variance_vs_halfline_variance_rel", 1e-12);
    std::vector<double> us = grid;
    for (int k = 0; k < random_cases; ++k) us.push_back(udist(gen));
    for (double u : us) {
      const int ell = ldist(gen);
      const auto half = ThresholdInterval::half_line(u);
      const double hv = leading_variance_halfline(ell, u);
      hermite_form.observe(relative(hv, leading_covariance(ell, half, half)));
      lkc.observe(relative(lkc_variance_leading(LKCIndex(0), ell, u), hv));
    }
    out.push_back(hermite_form.finish());
    out.push_back(lkc.finish());
  }
  {
    Tracker closed("kernel_integral_over_line_closed", 1e-10);
    Tracker quad("kernel_integral_over_line_quadrature", 1e-10);
    closed.observe(std::abs(interval_weight(ThresholdInterval::whole_line())));
    quad.observe(std::abs(interval_weight_quadrature(ThresholdInterval::whole_line())));
    out.push_back(closed.finish());
    out.push_back(quad.finish());

    Tracker weight("interval_weight_antiderivative_vs_quadrature", 1e-10);
    for (int k = 0; k < random_cases; ++k) {
      const auto i = random_interval(gen);
      weight.observe(std::abs(interval_weight(i) - interval_weight_quadrature(i)));
    }
    out.push_back(weight.finish());
  }
  {
    // The exact expectation is the S^2 instance of the kinematic formula with
    // L0 = 2, L1 = 0 and L2 = 4pi * ell(ell+1)/2.
    Tracker gkf("expected_epc_vs_minkowski_sum_rel", 1e-12);
    for (int k = 0; k < random_cases; ++k) {
      const int ell = ldist(gen);
      const double u = udist(gen);
      const double l2 = 4.0 * std::numbers::pi * ell * (ell + 1.0) / 2.0;
      const double sum = 2.0 * gaussian_minkowski_rho(0, u) + l2 * gaussian_minkowski_rho(2, u);
      gkf.observe(relative(sum, expected_epc(ell, u)));
    }
    out.push_back(gkf.finish());
  }
  return out;
}

void write_identity_csv(std::ostream& out, const std::vector<IdentityCheck>& checks) {
  out << "check_name,max_abs_error,tolerance,status\n";
  for (const auto& c : checks) {
    out << c.name << ',' << format_real(c.max_error) << ',' << format_real(c.tolerance) << ','
        << (c.passed ? "pass" : "fail") << '\n';
  }
}

}  // namespace sphtopo::analytic
