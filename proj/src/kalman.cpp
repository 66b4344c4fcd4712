#include "abcapf/kalman.hpp"

#include <cmath>
#include <stdexcept>

namespace abcapf {

double LinearGaussianParams::initial_mean() const {
  return prior_mean ? *prior_mean : mu / (1.0 - phi);
}

double LinearGaussianParams::initial_var() const {
  return prior_var ? *prior_var : sigma_h * sigma_h / (1.0 - phi * phi);
}

void validate(const LinearGaussianParams& params) {
  const bool explicit_prior = params.prior_mean && params.prior_var;
  if (!explicit_prior && !(std::abs(params.phi) < 1.0)) {
    throw std::invalid_argument(
        "linear-Gaussian model: |phi| < 1 required for the stationary prior");
  }
  if (!(params.sigma_h >= 0.0)) {
    throw std::invalid_argument("linear-Gaussian model: sigma_h must be >= 0");
  }
  if (!(params.sigma_y > 0.0)) {
    throw std::invalid_argument("linear-Gaussian model: sigma_y must be > 0");
  }
  if (params.prior_var && !(*params.prior_var >= 0.0)) {
    throw std::invalid_argument("linear-Gaussian model: prior_var must be >= 0");
  }
}

KalmanOutput kalman_run(const LinearGaussianParams& params,
                        std::span<const double> data) {
  validate(params);
  KalmanOutput out;
  out.means.reserve(data.size());
  out.variances.reserve(data.size());
  double m = params.initial_mean();
  double p = params.initial_var();
  const double q = params.sigma_h * params.sigma_h;
  const double r = params.sigma_y * params.sigma_y;
  for (double y : data) {
    const double m_pred = params.mu + params.phi * m;
    const double p_pred = params.phi * params.phi * p + q;
    const double gain = p_pred / (p_pred + r);
    m = m_pred + gain * (y - m_pred);
    p = (1.0 - gain) * p_pred;
    out.means.push_back(m);
    out.variances.push_back(p);
  }
  return out;
}

LinearGaussianModel::LinearGaussianModel(const LinearGaussianParams& params)
    : params_(params) {
  validate(params_);
}

double LinearGaussianModel::initial_sample(Rng& rng) const {
  return params_.initial_mean() + std::sqrt(params_.initial_var()) * rng.normal();
}

double LinearGaussianModel::transition_sample(double x_prev, Rng& rng) const {
  return transition_mean(x_prev) + params_.sigma_h * rng.normal();
}

double LinearGaussianModel::observe_sample(double x, Rng& rng) const {
  return x + params_.sigma_y * rng.normal();
}

LinearGaussianPath simulate(const LinearGaussianModel& model,
                            std::size_t horizon, Rng& rng) {
  LinearGaussianPath path;
  path.x.reserve(horizon + 1);
  path.y.reserve(horizon);
  path.x.push_back(model.initial_sample(rng));
  for (std::size_t t = 0; t < horizon; ++t) {
    path.x.push_back(model.transition_sample(path.x.back(), rng));
    path.y.push_back(model.observe_sample(path.x.back(), rng));
  }
  return path;
}

}  // namespace abcapf
