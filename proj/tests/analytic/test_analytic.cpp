#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "sphtopo/analytic.hpp"
#include "sphtopo/errors.hpp"
#include "sphtopo/identity_suite.hpp"

namespace sphtopo::analytic {
namespace {

constexpr double kPi = std::numbers::pi;
const double kInf = ThresholdInterval::kInf;

TEST(Hermite, ReferenceValues) {
  EXPECT_DOUBLE_EQ(hermite(0, 1.7), 1.0);
  EXPECT_DOUBLE_EQ(hermite(3, 2.0), 2.0);
  EXPECT_DOUBLE_EQ(hermite(4, 0.0), 3.0);
  EXPECT_DOUBLE_EQ(hermite(2, 3.0), 8.0);
  EXPECT_DOUBLE_EQ(hermite(-1, 0.0), 0.5);
  EXPECT_THROW(hermite(-2, 0.0), DomainError);
  EXPECT_DOUBLE_EQ(hermite_derivative(3, 2.0), 3.0 * 3.0);
  EXPECT_DOUBLE_EQ(hermite_derivative(0, 2.0), 0.0);
}

TEST(Minkowski, ReferenceValues) {
  EXPECT_NEAR(gaussian_minkowski_rho(2, 0.0), 0.0, 1e-17);
  EXPECT_NEAR(gaussian_minkowski_rho(1, 0.0), 1.0 / (2 * kPi), 1e-16);
  EXPECT_DOUBLE_EQ(gaussian_minkowski_rho(0, 0.0), 0.5);
  EXPECT_THROW(gaussian_minkowski_rho(-1, 0.0), DomainError);
}

TEST(ExpectedEpc, ReferenceValues) {
  for (int ell : {1, 7, 40}) EXPECT_NEAR(expected_epc(ell, 0.0), 1.0, 1e-15);
  EXPECT_NEAR(expected_epc(20, 1.0), 101.945014805903121, 1e-11);
  EXPECT_NEAR(expected_epc(10, -1.5), -19.5040176874098512, 1e-11);
  EXPECT_NEAR(expected_epc(5, -40.0), 2.0, 1e-15);
  EXPECT_NEAR(expected_epc(5, 40.0), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(expected_epc(5, -kInf), 2.0);
  EXPECT_DOUBLE_EQ(expected_epc(5, kInf), 0.0);
  EXPECT_THROW(expected_epc(0, 1.0), DomainError);
}

TEST(ExpectedEpc, Intervals) {
  EXPECT_DOUBLE_EQ(expected_epc(9, ThresholdInterval::whole_line()), 2.0);
  EXPECT_NEAR(expected_epc(40, ThresholdInterval::make(0.5, 2.0)), 112.174772597024377, 1e-10);
  EXPECT_NEAR(expected_epc(40, ThresholdInterval::half_line(1.2)), expected_epc(40, 1.2), 0.0);
}

TEST(Kernel, ValuesAndAntiderivative) {
  EXPECT_DOUBLE_EQ(p_kernel(0.0), -1.0);
  EXPECT_NEAR(p_kernel(std::sqrt(2 + std::sqrt(3.0))), 0.0, 1e-15);
  EXPECT_NEAR(p_kernel(std::sqrt(2 - std::sqrt(3.0))), 0.0, 1e-15);
  const double h = 1e-6;
  for (double t : {-1.3, 0.2, 2.7}) {
    EXPECT_NEAR((p_kernel_antiderivative(t + h) - p_kernel_antiderivative(t - h)) / (2 * h),
                p_kernel(t), 1e-8);
  }
  EXPECT_EQ(p_kernel(kInf), 0.0);
  EXPECT_EQ(p_kernel_antiderivative(-kInf), 0.0);
}

TEST(IntervalWeight, ReferenceValuesAndSigns) {
  const double w15 = interval_weight(ThresholdInterval::half_line(1.5));
  const double w25 = interval_weight(ThresholdInterval::half_line(2.5));
  EXPECT_NEAR(w15, -0.608723376296905743, 1e-14);
  EXPECT_NEAR(w25, -0.576672253807222352, 1e-14);
  EXPECT_GT(w15 * w25, 0.0);
  EXPECT_NEAR(interval_weight(ThresholdInterval::make(-0.5, 0.5)), -0.661872676938446552, 1e-14);
  EXPECT_NEAR(interval_weight(ThresholdInterval::whole_line()), 0.0, 1e-15);
  EXPECT_NEAR(interval_weight(ThresholdInterval::half_line(1.0)), 0.0, 1e-16);
  for (const auto& i : {ThresholdInterval::half_line(1.5), ThresholdInterval::make(-0.5, 0.5),
                        ThresholdInterval::make(-kInf, -0.3), ThresholdInterval::whole_line()}) {
    EXPECT_NEAR(interval_weight_quadrature(i), interval_weight(i), 1e-10);
  }
}

TEST(LeadingOrder, VarianceAndCovariance) {
  EXPECT_NEAR(leading_variance_halfline(40, 2.0), 1679.05409185623951, 1e-9);
  EXPECT_NEAR(leading_variance_halfline(40, 2.0), 40.0 * 40 * 40 / (8 * kPi) * 36 * std::exp(-4.0),
              1e-9);
  EXPECT_NEAR(leading_variance_halfline(40, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(leading_covariance(20, ThresholdInterval::half_line(1.5),
                                 ThresholdInterval::make(-kInf, -0.3)),
              -50.5695981554883432, 1e-10);
  for (double u : {-2.0, -0.4, 0.7, 2.2}) {
    const auto i = ThresholdInterval::half_line(u);
    EXPECT_NEAR(leading_covariance(30, i, i), leading_variance_halfline(30, u),
                1e-12 * (1 + leading_variance_halfline(30, u)));
  }
}

TEST(LeadingOrder, CauchySchwarzEquality) {
  const auto a = ThresholdInterval::make(-1.2, 0.4);
  const auto b = ThresholdInterval::half_line(2.1);
  const double c = leading_covariance(25, a, b);
  EXPECT_NEAR(c * c, leading_covariance(25, a, a) * leading_covariance(25, b, b), 1e-12 * c * c);
}

TEST(Lkc, UnifiedFormula) {
  for (double u : {-1.5, 0.3, 2.0}) {
    EXPECT_NEAR(lkc_variance_leading(LKCIndex(0), 33, u), leading_variance_halfline(33, u),
                1e-12 * (1 + leading_variance_halfline(33, u)));
    const double phi = std::exp(-u * u / 2) / std::sqrt(2 * kPi);
    EXPECT_NEAR(lkc_variance_leading(LKCIndex(2), 33, u), (u * u) * phi * phi / 33.0, 1e-15);
    EXPECT_NEAR(lkc_variance_leading(LKCIndex(1), 33, u, 2.5), 2.5 * 33 * std::pow(u * u - 1 + 1, 2) *
                                                                  phi * phi,
                1e-12);
  }
  EXPECT_THROW(LKCIndex(3), DomainError);
}

TEST(GaussianIntegrals, ClosedForms) {
  EXPECT_NEAR(p1_closed(2.0), 0.323945799079129, 1e-13);
  EXPECT_NEAR(p1_closed(0.7), -0.318499012034097, 1e-13);
  EXPECT_NEAR(p2_closed(1.3), 0.187168776234616, 1e-13);
  EXPECT_NEAR(g3_identity(0.0), 0.0997355701003582, 1e-13);
  EXPECT_NEAR(g3_identity(0.5), 0.12652347680592, 1e-13);
  EXPECT_NEAR(g2_identity(0.4, 1.1), 0.220007595150061, 1e-13);
}

TEST(GaussianIntegrals, QuadratureMatchesReference) {
  EXPECT_NEAR(p1_quadrature(0.7), -0.318499012034097, 1e-7);
  EXPECT_NEAR(p2_quadrature(1.3), 0.187168776234616, 1e-7);
  EXPECT_NEAR(g3_quadrature(0.0), 0.0997355701003582, 1e-7);
  EXPECT_NEAR(g2_quadrature(0.4, 1.1), 0.220007595150061, 1e-7);
}

TEST(GaussianIntegrals, AntiderivativesDifferentiate) {
  const double h = 1e-6;
  for (double t : {-2.0, 0.1, 1.4}) {
    EXPECT_NEAR((p1_antiderivative(t + h) - p1_antiderivative(t - h)) / (2 * h), p1_closed(t), 1e-8);
    EXPECT_NEAR((p2_antiderivative(t + h) - p2_antiderivative(t - h)) / (2 * h), p2_closed(t), 1e-8);
  }
}

TEST(Combined, ChainToKernelProduct) {
  const auto a = ThresholdInterval::half_line(2.0);
  EXPECT_NEAR(combined_coefficient(a, a), 0.104940880741, 1e-11);
  const double w = interval_weight(a);
  EXPECT_NEAR(combined_coefficient(a, a), w * w / (2 * kPi), 1e-15);
  EXPECT_NEAR(combined_coefficient(ThresholdInterval::whole_line(), a), 0.0, 1e-15);
  const auto b = ThresholdInterval::make(-0.7, 1.9);
  EXPECT_NEAR(combined_coefficient(a, b) * 20.0 * 20 * 20 / 4, leading_covariance(20, a, b),
              1e-12 * std::abs(leading_covariance(20, a, b)));
}

TEST(Prediction, Fields) {
  const auto p = predict(20, ThresholdInterval::half_line(1.0), ThresholdInterval::half_line(2.0));
  EXPECT_EQ(p.ell, 20);
  EXPECT_NEAR(p.expectation_first, 101.945014805903121, 1e-11);
  EXPECT_GE(p.leading_variance_first, 0.0);
  EXPECT_LE(p.leading_covariance * p.leading_covariance,
            p.leading_variance_first * p.leading_variance_second * (1 + 1e-12) + 1e-300);
  EXPECT_FALSE(p.order_remark.empty());
}

TEST(IdentitySuite, AllChecksPass) {
  const auto checks = run_identity_suite(7, 8);
  ASSERT_GE(checks.size(), 10u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.passed) << c.name << " error " << c.max_error << " tol " << c.tolerance;
    EXPECT_LE(c.max_error, c.tolerance) << c.name;
  }
  std::ostringstream out;
  write_identity_csv(out, checks);
  EXPECT_EQ(out.str().rfind("check_name,max_abs_error,tolerance,status\n", 0), 0u);
}

}  // namespace
}  // namespace sphtopo::analytic
