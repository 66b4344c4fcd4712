#pragma once

#include <optional>
#include <span>
#include <vector>

#include "abcapf/rng.hpp"

namespace abcapf {

/// Scalar linear-Gaussian state-space model
///
///   x_t = mu + phi x_{t-1} + sigma_h w_t
///   y_t = x_t + sigma_y v_t,      w_t, v_t ~ N(0, 1)
///
/// The prior on x_0 is the stationary law unless given explicitly; an
/// explicit prior lifts the |phi| < 1 requirement.
struct LinearGaussianParams {
  double mu = 0.0;
  double phi = 0.9;
  double sigma_h = 0.5;
  double sigma_y = 0.5;
  std::optional<double> prior_mean;
  std::optional<double> prior_var;

  double initial_mean() const;
  double initial_var() const;
};

void validate(const LinearGaussianParams& params);

struct KalmanOutput {
  std::vector<double> means;      // E[x_t | y_1:t], t = 1..T
  std::vector<double> variances;  // Var[x_t | y_1:t]
};

KalmanOutput kalman_run(const LinearGaussianParams& params,
                        std::span<const double> data);

/// The same model in StateSpaceModel form, for running the ABC filters
/// against the exact Kalman answer.
class LinearGaussianModel {
 public:
  explicit LinearGaussianModel(const LinearGaussianParams& params);

  const LinearGaussianParams& params() const { return params_; }

  double initial_sample(Rng& rng) const;
  double transition_mean(double x_prev) const {
    return params_.mu + params_.phi * x_prev;
  }
  double transition_sample(double x_prev, Rng& rng) const;
  double observe_sample(double x, Rng& rng) const;

 private:
  LinearGaussianParams params_;
};

struct LinearGaussianPath {
  std::vector<double> x;  // x_0 .. x_T
  std::vector<double> y;  // y_1 .. y_T
};

LinearGaussianPath simulate(const LinearGaussianModel& model,
                            std::size_t horizon, Rng& rng);

}  // namespace abcapf
