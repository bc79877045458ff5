#include "sphtopo/analytic.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "sphtopo/errors.hpp"
#include "sphtopo/quadrature.hpp"

namespace sphtopo::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);
const double kSqrt8 = std::sqrt(8.0);

// Integrates F over the interval from its antiderivative (zero at +-inf).
template <class Antiderivative>
double integrate_by_antiderivative(const ThresholdInterval& interval, Antiderivative&& F) {
  const double hi = std::isinf(interval.upper()) ? 0.0 : F(interval.upper());
  const double lo = std::isinf(interval.lower()) ? 0.0 : F(interval.lower());
  return hi - lo;
}

// Refines a node count until successive results agree.
template <class Rule>
double refine(int start, int max_doublings, double tolerance, const char* name, Rule&& rule) {
  double previous = rule(start);
  int n = start;
  for (int round = 0; round < max_doublings; ++round) {
    n *= 2;
    const double current = rule(n);
    if (std::abs(current - previous) <= tolerance) return current;
    previous = current;
  }
  throw QuadratureError(std::string(name) + ": successive Gauss-Hermite refinements disagree");
}

// Integrand shared by p1, p2, g2 and g3: the Hessian-determinant polynomial
// times the conditional Gaussian factors, exactly as written before any
// simplification.
double determinant_factor(double x1, double x2, double t) {
  return (x1 * t * kSqrt8 - x1 * x1 - x2 * x2) * std::exp(-1.5 * t * t) *
         std::exp(-0.5 * (x1 * x1 + x2 * x2 - kSqrt8 * t * x1));
}

// poly * exp(-t2 / 2), zero once the exponential underflows.
double times_gaussian(double poly, double t2) {
  const double e = std::exp(-0.5 * t2);
  return e == 0.0 ? 0.0 : poly * e;
}

}  // namespace

double normal_pdf(double u) { return std::exp(-0.5 * u * u) / std::sqrt(2.0 * kPi); }

double normal_upper_tail(double u) { return 0.5 * std::erfc(u / std::numbers::sqrt2); }

double hermite(int q, double u) {
  if (q < -1) throw DomainError("hermite: order must be >= -1");
  if (q == -1) return normal_upper_tail(u);
  if (q == 0) return 1.0;
  double h0 = 1.0, h1 = u;
  for (int k = 1; k < q; ++k) {
    const double h2 = u * h1 - k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double hermite_derivative(int q, double u) {
  if (q < 0) throw DomainError("hermite_derivative: order must be >= 0");
  return q == 0 ? 0.0 : q * hermite(q - 1, u);
}

double gaussian_minkowski_rho(int j, double u) {
  if (j < 0) throw DomainError("gaussian_minkowski_rho: index must be >= 0");
  if (j == 0) return normal_upper_tail(u);
  return std::pow(2.0 * kPi, -0.5 * (j + 1)) * times_gaussian(hermite(j - 1, u), u * u);
}

double expected_epc(int ell, double u) {
  if (ell < 1) throw DomainError("expected_epc: degree must be >= 1");
  if (u == -ThresholdInterval::kInf) return 2.0;
  if (u == ThresholdInterval::kInf) return 0.0;
  const double l = static_cast<double>(ell);
  return kSqrt2OverPi * times_gaussian(u, u * u) * l * (l + 1.0) / 2.0 +
         2.0 * normal_upper_tail(u);
}

double expected_epc(int ell, const ThresholdInterval& interval) {
  return expected_epc(ell, interval.lower()) - expected_epc(ell, interval.upper());
}

double p_kernel(double t) {
  const double t2 = t * t;
  return times_gaussian(-t2 * t2 + 4.0 * t2 - 1.0, t2);
}

double p_kernel_antiderivative(double t) {
  return times_gaussian(t * (t * t - 1.0), t * t);
}

double interval_weight(const ThresholdInterval& interval) {
  return integrate_by_antiderivative(interval, p_kernel_antiderivative);
}

double interval_weight_quadrature(const ThresholdInterval& interval) {
  const double a = interval.lower();
  const double b = interval.upper();
  if (a == b) return 0.0;
  if (std::isinf(a) && std::isinf(b)) {
    boost::math::quadrature::sinh_sinh<double> rule;
    return rule.integrate(p_kernel);
  }
  if (std::isinf(b)) {
    boost::math::quadrature::exp_sinh<double> rule;
    return rule.integrate([a](double s) { return p_kernel(a + s); });
  }
  if (std::isinf(a)) {
    boost::math::quadrature::exp_sinh<double> rule;
    return rule.integrate([b](double s) { return p_kernel(b - s); });
  }
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(p_kernel, a, b, 15,
                                                                        1e-14);
}

double leading_covariance(int ell, const ThresholdInterval& i1, const ThresholdInterval& i2) {
  if (ell < 1) throw DomainError("leading_covariance: degree must be >= 1");
  const double l = static_cast<double>(ell);
  return l * l * l / (8.0 * kPi) * interval_weight(i1) * interval_weight(i2);
}

double leading_variance_halfline(int ell, double u) {
  if (ell < 1) throw DomainError("leading_variance_halfline: degree must be >= 1");
  const double l = static_cast<double>(ell);
  const double h = hermite(3, u) + 2.0 * hermite(1, u);
  return l * l * l / (8.0 * kPi) * h * h * std::exp(-u * u);
}

LKCIndex::LKCIndex(int k) : k_(k) {
  if (k < 0 || k > 2) throw DomainError("LKCIndex: k must be 0, 1 or 2");
}

double lkc_variance_leading(LKCIndex k, int ell, double u, double const_k1) {
  if (ell < 1) throw DomainError("lkc_variance_leading: degree must be >= 1");
  const int kk = k.value();
  const double c = kk == 0 ? 0.25 : (kk == 1 ? const_k1 : 1.0);
  const double bracket = hermite(3 - kk, u) + hermite_derivative(2 - kk, u);
  const double phi = normal_pdf(u);
  return std::pow(static_cast<double>(ell), 3 - 2 * kk) * c * bracket * bracket * phi * phi;
}

double p1_closed(double t) { return kSqrt2OverPi * times_gaussian(t * t - 1.0, t * t); }

double p2_closed(double t) {
  const double t2 = t * t;
  return kSqrt2OverPi * times_gaussian(t2 * t2 + t2 - 4.0, t2);
}

double p1_antiderivative(double t) { return -kSqrt2OverPi * times_gaussian(t, t * t); }

double p2_antiderivative(double t) {
  return -kSqrt2OverPi * times_gaussian(t * t * t + 4.0 * t, t * t);
}

double p1_quadrature(double t) {
  const std::array<double, 2> centre{std::numbers::sqrt2 * t, 0.0};
  const double norm = std::pow(2.0 * kPi, -1.5);
  return refine(40, 3, 1e-8, "p1_quadrature", [&](int n) {
    return norm * quadrature::hermite_tensor<2>(n, centre, [t](const std::array<double, 2>& x) {
             return determinant_factor(x[0], x[1], t);
           });
  });
}

double p2_quadrature(double t) {
  const std::array<double, 2> centre{std::numbers::sqrt2 * t, 0.0};
  const double norm = std::pow(2.0 * kPi, -1.5);
  return refine(40, 3, 1e-8, "p2_quadrature", [&](int n) {
    return norm * quadrature::hermite_tensor<2>(n, centre, [t](const std::array<double, 2>& x) {
             const double r = 3.0 * t - std::numbers::sqrt2 * x[0];
             return r * r * determinant_factor(x[0], x[1], t);
           });
  });
}

double g3_quadrature(double t) {
  const std::array<double, 2> centre{std::numbers::sqrt2 * t, 0.0};
  const double norm = 0.125 * std::pow(2.0 * kPi, -1.5);
  return refine(40, 3, 1e-8, "g3_quadrature", [&](int n) {
    return norm * quadrature::hermite_tensor<2>(n, centre, [t](const std::array<double, 2>& z) {
             const double r = 3.0 * t - std::numbers::sqrt2 * z[0];
             return determinant_factor(z[0], z[1], t) * (3.0 - r * r);
           });
  });
}

double g2_quadrature(double t1, double t2) {
  const std::array<double, 4> centre{std::numbers::sqrt2 * t1, 0.0, std::numbers::sqrt2 * t2, 0.0};
  const double norm = 0.5 * std::pow(2.0 * kPi, -3.0);
  return refine(24, 1, 1e-7, "g2_quadrature", [&](int n) {
    return norm * quadrature::hermite_tensor<4>(n, centre, [t1, t2](const std::array<double, 4>& v) {
             const double a = 3.0 * t1 - std::numbers::sqrt2 * v[0];
             const double b = 3.0 * t2 - std::numbers::sqrt2 * v[2];
             return determinant_factor(v[0], v[1], t1) * determinant_factor(v[2], v[3], t2) *
                    (-6.0 + a * a + b * b);
           });
  });
}

double g2_identity(double t1, double t2) {
  return -3.0 * p1_closed(t1) * p1_closed(t2) + 0.5 * p2_closed(t1) * p1_closed(t2) +
         0.5 * p1_closed(t1) * p2_closed(t2);
}

double g3_identity(double t) { return 0.375 * p1_closed(t) - 0.125 * p2_closed(t); }

double combined_coefficient(const ThresholdInterval& i1, const ThresholdInterval& i2) {
  const double i11 = integrate_by_antiderivative(i1, p1_antiderivative);
  const double i12 = integrate_by_antiderivative(i1, p2_antiderivative);
  const double i21 = integrate_by_antiderivative(i2, p1_antiderivative);
  const double i22 = integrate_by_antiderivative(i2, p2_antiderivative);
  return 6.25 * i11 * i21 - 1.25 * i12 * i21 - 1.25 * i11 * i22 + 0.25 * i12 * i22;
}

AnalyticPrediction predict(int ell, const ThresholdInterval& i1, const ThresholdInterval& i2) {
  AnalyticPrediction out;
  out.ell = ell;
  out.expectation_first = expected_epc(ell, i1);
  out.expectation_second = expected_epc(ell, i2);
  out.leading_variance_first = leading_covariance(ell, i1, i1);
  out.leading_variance_second = leading_covariance(ell, i2, i2);
  out.leading_covariance = leading_covariance(ell, i1, i2);
  return out;
}

}  // namespace sphtopo::analytic
