#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abcapf/rng.hpp"
#include "abcapf/stable.hpp"

namespace abcapf {

/// Stochastic volatility model with alpha-stable returns:
///
///   y_t = exp(h_t / 2) v_t,            v_t ~ SD(alpha, beta, sigma_v, 0)
///   h_t = mu + phi h_{t-1} + sigma_h w_t,  w_t ~ N(0, 1)
///   h_0 ~ N(mu / (1 - phi), sigma_h^2 / (1 - phi^2))
class SvmParams {
 public:
  SvmParams(double mu, double phi, double sigma_h, double alpha, double beta,
            double sigma_v);

  double mu() const { return mu_; }
  double phi() const { return phi_; }
  double sigma_h() const { return sigma_h_; }
  /// Observation noise law; delta is always 0 and gamma is sigma_v.
  const StableParams& obs_noise() const { return obs_noise_; }

  double stationary_mean() const { return mu_ / (1.0 - phi_); }
  double stationary_variance() const {
    return sigma_h_ * sigma_h_ / (1.0 - phi_ * phi_);
  }

 private:
  double mu_;
  double phi_;
  double sigma_h_;
  StableParams obs_noise_;
};

struct Trajectory {
  std::vector<double> h;  // h_0 .. h_T
  std::vector<double> y;  // y_1 .. y_T, so y[t - 1] pairs with h[t]
  std::uint64_t seed = 0;

  std::size_t horizon() const { return y.size(); }
};

double initial_sample(const SvmParams& params, Rng& rng);
double transition_mean(const SvmParams& params, double h_prev);
double transition_sample(const SvmParams& params, double h_prev, Rng& rng);
double transition_logpdf(const SvmParams& params, double h_next, double h_prev);
double observe_sample(const SvmParams& params, double h, Rng& rng);

/// Simulates h_0..h_T and y_1..y_T from a stream seeded with `seed`.
Trajectory simulate(const SvmParams& params, std::size_t horizon,
                    std::uint64_t seed);

/// SvmParams bundled with a prepared stable sampler; satisfies
/// StateSpaceModel. Draws match the free functions above for the same stream.
class SvmModel {
 public:
  explicit SvmModel(const SvmParams& params);

  const SvmParams& params() const { return params_; }

  double initial_sample(Rng& rng) const;
  double transition_mean(double h_prev) const {
    return params_.mu() + params_.phi() * h_prev;
  }
  double transition_sample(double h_prev, Rng& rng) const;
  double observe_sample(double h, Rng& rng) const;

 private:
  SvmParams params_;
  StableSampler noise_;
};

}  // namespace abcapf
