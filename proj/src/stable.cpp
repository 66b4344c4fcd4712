#include "abcapf/stable.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace abcapf {

namespace {

using std::numbers::pi;

// exp(-kEnvelopeLog) = 1e-12 bounds the truncated characteristic function.
const double kEnvelopeLog = std::log(1e12);
constexpr std::size_t kMaxInitialPanels = 4000;

bool near_one(double alpha) { return std::abs(alpha - 1.0) < kAlphaOneBand; }

struct CmsConstants {
  bool alpha_one;
  double alpha;
  double beta;
  double inv_alpha;
  double exponent;
  double shift;
  double scale;
};

CmsConstants cms_constants(double alpha, double beta) {
  CmsConstants c{};
  c.alpha_one = near_one(alpha);
  c.alpha = alpha;
  c.beta = beta;
  if (!c.alpha_one) {
    const double zeta = beta * std::tan(pi * alpha / 2.0);
    c.inv_alpha = 1.0 / alpha;
    c.exponent = (1.0 - alpha) / alpha;
    c.shift = std::atan(zeta);
    c.scale = std::pow(std::cos(c.shift), -c.inv_alpha);
  }
  return c;
}

double cms_eval(const CmsConstants& c, double u, double w) {
  if (c.alpha_one) {
    const double half_pi = pi / 2.0;
    const double tilt = half_pi + c.beta * u;
    return (2.0 / pi) *
           (tilt * std::tan(u) -
            c.beta * std::log(half_pi * w * std::cos(u) / tilt));
  }
  const double cos_u = std::cos(u);
  return c.scale * std::sin(c.alpha * u + c.shift) /
         std::pow(cos_u, c.inv_alpha) *
         std::pow(std::cos(u - c.alpha * u - c.shift) / w, c.exponent);
}

double alpha_one_location(const StableParams& p) {
  if (p.gamma() == 0.0) return p.delta();
  return p.delta() + p.beta() * (2.0 / pi) * p.gamma() * std::log(p.gamma());
}

void validate_shape(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw std::invalid_argument("stable: alpha must lie in (0, 2]");
  }
  if (!(beta >= -1.0 && beta <= 1.0)) {
    throw std::invalid_argument("stable: beta must lie in [-1, 1]");
  }
}

// Upper limit of the inversion integrals and the number of oscillations of
// the integrand over [0, upper], used to seed the initial panel count.
struct InversionRange {
  double upper;
  std::size_t panels;
};

InversionRange inversion_range(const StableParams& p, double x) {
  if (!(p.gamma() > 0.0)) {
    throw std::invalid_argument("stable inversion requires gamma > 0");
  }
  double upper = 0.0;
  double phase = 0.0;
  const double offset = std::abs(x - p.delta());
  if (p.is_alpha_one()) {
    upper = kEnvelopeLog / p.gamma();
    phase = (2.0 / pi) * std::abs(p.beta()) * kEnvelopeLog *
                std::abs(std::log(upper)) +
            offset * upper;
  } else {
    upper = std::pow(kEnvelopeLog, 1.0 / p.alpha()) / p.gamma();
    phase = std::abs(p.beta() * std::tan(pi * p.alpha() / 2.0)) *
                kEnvelopeLog +
            offset * upper;
  }
  const double oscillations = phase / (2.0 * pi);
  const auto panels = static_cast<std::size_t>(
      std::min<double>(kMaxInitialPanels, 16.0 + 4.0 * std::ceil(oscillations)));
  return {upper, panels};
}

// Modulus exp(-(gamma t)^alpha) and phase of psi(t) e^{-ixt} for t > 0.
struct Polar {
  double modulus;
  double phase;
};

Polar integrand_polar(const StableParams& p, double x, double t) {
  if (p.is_alpha_one()) {
    const double gt = p.gamma() * t;
    return {std::exp(-gt),
            -gt * p.beta() * (2.0 / pi) * std::log(t) + (p.delta() - x) * t};
  }
  const double gta = std::pow(p.gamma() * t, p.alpha());
  const double zeta = p.beta() * std::tan(pi * p.alpha() / 2.0);
  return {std::exp(-gta), gta * zeta + (p.delta() - x) * t};
}

// Distribution function of SD(alpha, beta, 1, 0) from the non-oscillatory
// single-integral representation over theta in (-theta0, pi/2), alpha != 1.
double standard_cdf(double x, double alpha, double beta,
                    const QuadratureOptions& opts) {
  if (x < 0.0) return 1.0 - standard_cdf(-x, alpha, -beta, opts);
  const double theta0 = std::atan(beta * std::tan(pi * alpha / 2.0)) / alpha;
  const double c1 = alpha < 1.0 ? (pi / 2.0 - theta0) / pi : 1.0;
  if (x == 0.0) return (pi / 2.0 - theta0) / pi;
  if (std::isinf(x)) return 1.0;
  const double power = alpha / (alpha - 1.0);
  const double log_head =
      power * std::log(x) + std::log(std::cos(alpha * theta0)) / (alpha - 1.0);
  auto integrand = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(alpha * (theta0 + theta));
    const double k = std::cos(alpha * theta0 + (alpha - 1.0) * theta);
    if (!(c > 0.0) || !(s > 0.0) || !(k > 0.0)) {
      // Rounding at an end point; use the limit there.
      const bool upper_end = theta > 0.5 * (pi / 2.0 - theta0);
      return (upper_end == (alpha > 1.0)) ? 1.0 : 0.0;
    }
    const double log_g =
        log_head + power * (std::log(c) - std::log(s)) + std::log(k) - std::log(c);
    if (log_g > 700.0) return 0.0;
    return std::exp(-std::exp(log_g));
  };
  if (!(pi / 2.0 > -theta0)) return c1;
  const double sign = alpha < 1.0 ? 1.0 : -1.0;
  const QuadratureResult r = integrate(integrand, -theta0, pi / 2.0, opts);
  return c1 + sign * r.value / pi;
}

double standard_cdf_alpha_one(double x, double beta,
                              const QuadratureOptions& opts) {
  if (beta == 0.0) return 0.5 + std::atan(x) / pi;
  if (beta < 0.0) return 1.0 - standard_cdf_alpha_one(-x, -beta, opts);
  const double log_head = -pi * x / (2.0 * beta);
  auto integrand = [&](double theta) {
    const double c = std::cos(theta);
    const double tilt = pi / 2.0 + beta * theta;
    if (!(c > 0.0) || !(tilt > 0.0)) return theta > 0.0 ? 0.0 : 1.0;
    const double log_g = log_head + std::log(2.0 / pi) + std::log(tilt) -
                         std::log(c) + tilt * std::tan(theta) / beta;
    if (log_g > 700.0) return 0.0;
    return std::exp(-std::exp(log_g));
  };
  return integrate(integrand, -pi / 2.0, pi / 2.0, opts).value / pi;
}

}  // namespace

StableParams::StableParams(double alpha, double beta, double gamma,
                           double delta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
  validate_shape(alpha, beta);
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("stable: gamma must be finite and >= 0");
  }
  if (!std::isfinite(delta)) {
    throw std::invalid_argument("stable: delta must be finite");
  }
}

bool StableParams::is_alpha_one() const { return near_one(alpha_); }

std::complex<double> char_fn(const StableParams& params, double t) {
  if (t == 0.0) return {1.0, 0.0};
  const double abs_t = std::abs(t);
  const double sign_t = t > 0.0 ? 1.0 : -1.0;
  std::complex<double> exponent;
  if (params.is_alpha_one()) {
    const double gt = params.gamma() * abs_t;
    exponent = {-gt, -gt * params.beta() * (2.0 / pi) * sign_t *
                         std::log(abs_t)};
  } else {
    const double gta = std::pow(params.gamma() * abs_t, params.alpha());
    const double zeta = params.beta() * std::tan(pi * params.alpha() / 2.0);
    exponent = {-gta, gta * zeta * sign_t};
  }
  exponent += std::complex<double>(0.0, params.delta() * t);
  return std::exp(exponent);
}

double cms_standard(double alpha, double beta, double u, double w) {
  validate_shape(alpha, beta);
  return cms_eval(cms_constants(alpha, beta), u, w);
}

double sample_standard(double alpha, double beta, Rng& rng) {
  validate_shape(alpha, beta);
  const double u = rng.uniform(-pi / 2.0, pi / 2.0);
  const double w = rng.exponential();
  return cms_eval(cms_constants(alpha, beta), u, w);
}

double transform(double x, const StableParams& params) {
  if (params.is_alpha_one()) {
    return params.gamma() * x + alpha_one_location(params);
  }
  return params.gamma() * x + params.delta();
}

double sample(const StableParams& params, Rng& rng) {
  return transform(sample_standard(params.alpha(), params.beta(), rng), params);
}

StableSampler::StableSampler(const StableParams& params)
    : params_(params), location_(params.delta()) {
  const CmsConstants c = cms_constants(params.alpha(), params.beta());
  alpha_one_ = c.alpha_one;
  inv_alpha_ = c.inv_alpha;
  exponent_ = c.exponent;
  shift_ = c.shift;
  scale_ = c.scale;
  if (alpha_one_) location_ = alpha_one_location(params);
}

double StableSampler::operator()(Rng& rng) const {
  const double u = rng.uniform(-pi / 2.0, pi / 2.0);
  const double w = rng.exponential();
  const CmsConstants c{alpha_one_, params_.alpha(), params_.beta(),
                       inv_alpha_,  exponent_,      shift_,
                       scale_};
  return params_.gamma() * cms_eval(c, u, w) + location_;
}

double pdf_numeric(const StableParams& params, double x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("pdf_numeric: tol must be > 0");
  const InversionRange range = inversion_range(params, x);
  auto integrand = [&](double t) {
    const Polar z = integrand_polar(params, x, t);
    return z.modulus * std::cos(z.phase);
  };
  QuadratureOptions opts;
  opts.abs_tol = tol * pi;
  opts.initial_panels = range.panels;
  const QuadratureResult r = integrate(integrand, 0.0, range.upper, opts);
  return std::max(0.0, r.value / pi);
}

double cdf_numeric(const StableParams& params, double x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("cdf_numeric: tol must be > 0");
  if (!(params.gamma() > 0.0)) {
    throw std::invalid_argument("stable inversion requires gamma > 0");
  }
  if (std::isnan(x)) throw std::invalid_argument("cdf_numeric: x is NaN");
  const double location =
      params.is_alpha_one() ? alpha_one_location(params) : params.delta();
  const double z = (x - location) / params.gamma();
  QuadratureOptions opts;
  opts.abs_tol = tol * pi;
  opts.initial_panels = 32;
  const double f = params.is_alpha_one()
                       ? standard_cdf_alpha_one(z, params.beta(), opts)
                       : standard_cdf(z, params.alpha(), params.beta(), opts);
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace abcapf
