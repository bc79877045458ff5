#pragma once

#include <string>

#include "sphtopo/interval.hpp"

namespace sphtopo::analytic {

/// Standard normal density.
double normal_pdf(double u);
/// Upper tail 1 - Phi(u), computed without cancellation.
double normal_upper_tail(double u);

/// Probabilists' Hermite polynomial H_q(u); q = -1 gives 1 - Phi(u).
/// Throws DomainError for q < -1.
double hermite(int q, double u);
/// d/du H_q(u) = q H_{q-1}(u) for q >= 0 (zero for q = 0).
double hermite_derivative(int q, double u);

/// Gaussian Minkowski functional rho_j(u):
/// (2pi)^{-(j+1)/2} H_{j-1}(u) e^{-u^2/2} for j >= 1, and 1 - Phi(u) for j = 0.
double gaussian_minkowski_rho(int j, double u);

/// Exact expected Euler characteristic of the upper excursion set {f >= u}
/// of a degree-ell random eigenfunction:
///   sqrt(2/pi) e^{-u^2/2} u ell(ell+1)/2 + 2 (1 - Phi(u)).
double expected_epc(int ell, double u);

/// Expected Euler characteristic of f^{-1}(I) for a general interval,
/// E(lower) - E(upper), with E(-inf) = 2 and E(+inf) = 0.
double expected_epc(int ell, const ThresholdInterval& interval);

/// Leading-order covariance kernel p(t) = (-t^4 + 4t^2 - 1) e^{-t^2/2}.
double p_kernel(double t);

/// Antiderivative t(t^2 - 1) e^{-t^2/2} of p, zero at +-inf.
double p_kernel_antiderivative(double t);

/// Integral of p over the interval via the global antiderivative.
double interval_weight(const ThresholdInterval& interval);

/// Same integral by adaptive quadrature (Gauss-Kronrod on finite intervals,
/// exp-sinh / sinh-sinh on infinite ones).
double interval_weight_quadrature(const ThresholdInterval& interval);

/// ell^3 / (8 pi) * weight(I1) * weight(I2).
double leading_covariance(int ell, const ThresholdInterval& i1, const ThresholdInterval& i2);

/// Leading variance for the upper half-line [u, inf) in Hermite form:
/// ell^3/(8pi) (H_3(u) + 2 H_1(u))^2 e^{-u^2}.
double leading_variance_halfline(int ell, double u);

/// Selects a Lipschitz-Killing curvature: 0 Euler characteristic,
/// 1 half boundary length, 2 area.
class LKCIndex {
 public:
  /// Throws DomainError unless k is 0, 1 or 2.
  explicit LKCIndex(int k);
  int value() const noexcept { return k_; }

 private:
  int k_;
};

/// Unified leading variance of the k-th Lipschitz-Killing curvature of the
/// excursion set above u:
///   ell^{3-2k} c_k [H_{3-k}(u) + H'_{2-k}(u)]^2 phi(u)^2
/// with c_0 = 1/4, c_1 = const_k1 (not determined analytically), c_2 = 1.
double lkc_variance_leading(LKCIndex k, int ell, double u, double const_k1 = 1.0);

/// Closed forms of the two Gaussian integrals behind the leading term.
double p1_closed(double t);
double p2_closed(double t);

/// Antiderivatives of p1 and p2 (zero at +-inf).
double p1_antiderivative(double t);
double p2_antiderivative(double t);

/// The 2-D Gaussian integral defining p1, by tensor Gauss-Hermite quadrature
/// about the completed-square centre. Node counts start at 40 per axis and
/// double until two successive results agree to 1e-8; throws QuadratureError
/// if they never do.
double p1_quadrature(double t);
/// Same for p2 (the p1 integrand weighted by (3t - sqrt2 x1)^2).
double p2_quadrature(double t);
/// 2-D integral defining g3.
double g3_quadrature(double t);
/// 4-D integral defining g2 (>= 24 nodes per axis, agreement 1e-7).
double g2_quadrature(double t1, double t2);

/// g2 and g3 rebuilt from the closed forms of p1 and p2.
double g2_identity(double t1, double t2);
double g3_identity(double t);

/// Leading coefficient assembled from the p1/p2 interval integrals:
/// 25/4 I11 I21 - 5/4 I12 I21 - 5/4 I11 I22 + 1/4 I12 I22,
/// with I_ij the integral of p_j over interval i.
double combined_coefficient(const ThresholdInterval& i1, const ThresholdInterval& i2);

/// Closed-form predictions for one degree and pair of intervals.
struct AnalyticPrediction {
  int ell = 0;
  double expectation_first = 0.0;
  double expectation_second = 0.0;
  double leading_variance_first = 0.0;
  double leading_variance_second = 0.0;
  double leading_covariance = 0.0;
  /// Leading terms carry an O(ell^{5/2}) remainder with an unspecified
  /// universal constant.
  std::string order_remark = "leading order; remainder O(ell^(5/2))";
};

AnalyticPrediction predict(int ell, const ThresholdInterval& i1, const ThresholdInterval& i2);

}  // namespace sphtopo::analytic
