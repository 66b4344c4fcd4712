#pragma once

// Reference values computed without the library's own quadrature or
// characteristic function.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

inline double normal_cdf(double x, double mean, double sd) {
  return 0.5 * std::erfc(-(x - mean) / (sd * std::numbers::sqrt2));
}

inline double cauchy_cdf(double x, double loc, double scale) {
  return 0.5 + std::atan((x - loc) / scale) / std::numbers::pi;
}

// Stable characteristic function, alpha != 1 only.
inline std::complex<double> stable_cf(double alpha, double beta, double gamma,
                                      double t) {
  const double a = std::pow(gamma * std::abs(t), alpha);
  const double zeta = beta * std::tan(std::numbers::pi * alpha / 2.0);
  const double sign = t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0);
  return std::exp(std::complex<double>(-a, a * zeta * sign));
}

/// Stable density by tanh-sinh integration of the inversion integral, split
/// into unit panels so the oscillation stays resolved.
inline double stable_pdf(double alpha, double beta, double gamma, double x) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto f = [&](double t) {
    return std::real(stable_cf(alpha, beta, gamma, t) *
                     std::exp(std::complex<double>(0.0, -x * t)));
  };
  const double upper = std::pow(std::log(1e14), 1.0 / alpha) / gamma;
  const double step = std::min(1.0, std::numbers::pi / (std::abs(x) + 1.0));
  double sum = 0.0;
  for (double lo = 0.0; lo < upper; lo += step) {
    sum += ts.integrate(f, lo, std::min(lo + step, upper));
  }
  return sum / std::numbers::pi;
}

/// Non-central t density from its mixture form
///   f(x) = int_0^inf phi(x sqrt(v/nu) - lambda) sqrt(v/nu) chi2_nu(v) dv.
inline double noncentral_t_pdf(double x, double nu, double lambda) {
  boost::math::quadrature::exp_sinh<double> es;
  const double log_norm = -0.5 * nu * std::log(2.0) - std::lgamma(0.5 * nu);
  auto f = [&](double v) {
    if (v <= 0.0) return 0.0;
    const double s = std::sqrt(v / nu);
    const double z = x * s - lambda;
    return std::exp(-0.5 * z * z - 0.5 * std::log(2.0 * std::numbers::pi) +
                    log_norm + (0.5 * nu - 1.0) * std::log(v) - 0.5 * v) *
           s;
  };
  return es.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double variance(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace oracle
