#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "abcapf/abc_apf.hpp"
#include "abcapf/filter_config.hpp"
#include "abcapf/kernels.hpp"
#include "abcapf/particle_cloud.hpp"
#include "abcapf/resample.hpp"
#include "abcapf/rng.hpp"
#include "abcapf/state_space.hpp"
#include "abcapf/weights.hpp"

namespace abcapf {

/// Adaptive tolerance of the ABC-SMC baseline: the k-th smallest distance
/// with k = ceil(percentile * N), clamped to [1, N]. NaN distances sort last.
double abc_smc_tolerance(std::span<const double> distances, double percentile);

struct SmcStepDiagnostics {
  double epsilon = 0.0;  // resolved tolerance eps_t
  double ess = 0.0;      // before any resampling
  bool resampled = false;
  bool degenerate = false;
};

struct SmcStep {
  ParticleCloud cloud;
  /// Weighted mean of the weighted (pre-resampling) cloud.
  double filtered_mean = 0.0;
  SmcStepDiagnostics diagnostics;
};

/// One step of the bootstrap ABC filter with a uniform kernel: propagate
/// every particle, simulate one pseudo-observation each, keep the
/// ceil(P_eps N) closest (ties inclusive) with their previous weights,
/// normalise, then resample per policy.
template <StateSpaceModel Model>
SmcStep abc_smc_step(const ParticleCloud& cloud, double y, const Model& model,
                     const FilterConfig& config, Rng& rng) {
  const std::size_t n = cloud.size();
  if (n == 0) throw std::invalid_argument("abc_smc_step: empty cloud");
  Rng propagate_rng = rng.split();
  Rng resample_rng = rng.split();

  std::vector<double> states(n);
  std::vector<double> distances(n);
  for (std::size_t i = 0; i < n; ++i) {
    states[i] = model.transition_sample(cloud.states[i], propagate_rng);
    distances[i] = std::abs(model.observe_sample(states[i], propagate_rng) - y);
  }

  SmcStep out;
  auto& diag = out.diagnostics;
  diag.epsilon = abc_smc_tolerance(distances, config.smc_percentile);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = distances[i] <= diag.epsilon ? cloud.log_weights[i] : kLogZero;
  }
  try {
    normalize(weights);
  } catch (const DegenerateCloudError&) {
    diag.degenerate = true;
    weights.assign(n, -std::log(static_cast<double>(n)));
  }
  diag.ess = ess(weights);
  out.filtered_mean = weighted_mean(states, weights);
  out.cloud = ParticleCloud{std::move(states), std::move(weights), cloud.t + 1};

  diag.resampled = config.resample_policy.should_resample(diag.ess);
  if (diag.resampled) {
    out.cloud = resample(out.cloud, config.resample_scheme, resample_rng).cloud;
  }
  return out;
}

template <StateSpaceModel Model>
FilterOutput abc_smc_run(std::span<const double> data, const Model& model,
                         const FilterConfig& config, Rng& rng) {
  if (data.empty()) throw std::invalid_argument("abc_smc_run: empty data");
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  FilterOutput out;
  out.filtered_mean.reserve(data.size());
  out.ess_trace.reserve(data.size());
  Rng init_rng = rng.split();
  ParticleCloud cloud = initial_cloud(model, config.n_particles, init_rng);
  for (double y : data) {
    SmcStep step = abc_smc_step(cloud, y, model, config, rng);
    cloud = std::move(step.cloud);
    out.filtered_mean.push_back(step.filtered_mean);
    out.ess_trace.push_back(step.diagnostics.ess);
    if (step.diagnostics.resampled) ++out.resample_count;
    if (step.diagnostics.degenerate) ++out.degeneracy_count;
  }
  out.elapsed = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

}  // namespace abcapf
