#include "abcapf/svm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace abcapf {

SvmParams::SvmParams(double mu, double phi, double sigma_h, double alpha,
                     double beta, double sigma_v)
    : mu_(mu),
      phi_(phi),
      sigma_h_(sigma_h),
      obs_noise_(alpha, beta, sigma_v, 0.0) {
  if (!std::isfinite(mu)) throw std::invalid_argument("svm: mu must be finite");
  if (!(std::abs(phi) < 1.0)) {
    throw std::invalid_argument("svm: |phi| must be < 1 for stationarity");
  }
  if (!(sigma_h > 0.0) || !std::isfinite(sigma_h)) {
    throw std::invalid_argument("svm: sigma_h must be positive");
  }
  if (!(sigma_v > 0.0)) {
    throw std::invalid_argument("svm: sigma_v must be positive");
  }
}

double initial_sample(const SvmParams& params, Rng& rng) {
  return params.stationary_mean() +
         std::sqrt(params.stationary_variance()) * rng.normal();
}

double transition_mean(const SvmParams& params, double h_prev) {
  return params.mu() + params.phi() * h_prev;
}

double transition_sample(const SvmParams& params, double h_prev, Rng& rng) {
  return transition_mean(params, h_prev) + params.sigma_h() * rng.normal();
}

double transition_logpdf(const SvmParams& params, double h_next,
                         double h_prev) {
  const double z = (h_next - transition_mean(params, h_prev)) / params.sigma_h();
  return -0.5 * std::log(2.0 * std::numbers::pi) - std::log(params.sigma_h()) -
         0.5 * z * z;
}

double observe_sample(const SvmParams& params, double h, Rng& rng) {
  return std::exp(0.5 * h) * sample(params.obs_noise(), rng);
}

Trajectory simulate(const SvmParams& params, std::size_t horizon,
                    std::uint64_t seed) {
  if (horizon < 1) throw std::invalid_argument("simulate: horizon must be >= 1");
  const SvmModel model(params);
  Rng rng(seed);
  Trajectory traj;
  traj.seed = seed;
  traj.h.reserve(horizon + 1);
  traj.y.reserve(horizon);
  traj.h.push_back(model.initial_sample(rng));
  for (std::size_t t = 1; t <= horizon; ++t) {
    const double h = model.transition_sample(traj.h.back(), rng);
    traj.h.push_back(h);
    traj.y.push_back(model.observe_sample(h, rng));
  }
  return traj;
}

SvmModel::SvmModel(const SvmParams& params)
    : params_(params), noise_(params.obs_noise()) {}

double SvmModel::initial_sample(Rng& rng) const {
  return abcapf::initial_sample(params_, rng);
}

double SvmModel::transition_sample(double h_prev, Rng& rng) const {
  return transition_mean(h_prev) + params_.sigma_h() * rng.normal();
}

double SvmModel::observe_sample(double h, Rng& rng) const {
  return std::exp(0.5 * h) * noise_(rng);
}

}  // namespace abcapf
