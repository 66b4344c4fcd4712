#pragma once

#include <complex>

#include "abcapf/quadrature.hpp"
#include "abcapf/rng.hpp"

namespace abcapf {

/// Parameters of the alpha-stable law SD(alpha, beta, gamma, delta).
///
/// The characteristic function is
///
///   alpha != 1: exp(-gamma^a |t|^a [1 - i beta tan(pi a / 2) sign t] + i delta t)
///   alpha == 1: exp(-gamma |t| [1 + i beta (2/pi) sign t log|t|] + i delta t)
///
/// Under this parameterization the density is discontinuous in alpha at 1.
/// Everything with |alpha - 1| < kAlphaOneBand is treated as alpha == 1.
class StableParams {
 public:
  StableParams(double alpha, double beta, double gamma = 1.0,
               double delta = 0.0);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double delta() const { return delta_; }

  bool is_alpha_one() const;

 private:
  double alpha_;
  double beta_;
  double gamma_;
  double delta_;
};

inline constexpr double kAlphaOneBand = 1e-8;

std::complex<double> char_fn(const StableParams& params, double t);

/// Chambers-Mallows-Stuck map from U ~ Uniform(-pi/2, pi/2) and W ~ Expo(1)
/// to a SD(alpha, beta, 1, 0) variate.
double cms_standard(double alpha, double beta, double u, double w);

/// One SD(alpha, beta, 1, 0) draw; consumes one uniform then one exponential.
double sample_standard(double alpha, double beta, Rng& rng);

/// Scale/location map from SD(alpha, beta, 1, 0) to SD(alpha, beta, gamma,
/// delta). For alpha == 1 the location picks up beta (2/pi) gamma log gamma,
/// taken as 0 when gamma == 0.
double transform(double x, const StableParams& params);

double sample(const StableParams& params, Rng& rng);

/// Precomputes the trigonometric constants of the CMS map for repeated
/// sampling from one law. Produces the same draws as `sample`.
class StableSampler {
 public:
  explicit StableSampler(const StableParams& params);

  double operator()(Rng& rng) const;
  const StableParams& params() const { return params_; }

 private:
  StableParams params_;
  bool alpha_one_;
  double inv_alpha_;
  double exponent_;    // (1 - alpha) / alpha
  double shift_;       // alpha * B, where B = atan(beta tan(pi alpha / 2)) / alpha
  double scale_;       // (cos(alpha B))^(-1/alpha)
  double location_;    // delta, plus the alpha == 1 correction
};

/// Density by Fourier inversion, f(x) = (1/pi) int_0^inf Re[psi(t) e^{-ixt}] dt,
/// truncated where exp(-(gamma t)^alpha) < 1e-12. Requires gamma > 0.
/// Intended as a reference oracle; each call runs an adaptive quadrature.
double pdf_numeric(const StableParams& params, double x, double tol);

/// Distribution function from Zolotarev's integral representation: a
/// non-oscillating integral over a finite angle range, so the cost does not
/// grow with |x|. Requires gamma > 0. Result clamped to [0, 1].
double cdf_numeric(const StableParams& params, double x, double tol);

}  // namespace abcapf
