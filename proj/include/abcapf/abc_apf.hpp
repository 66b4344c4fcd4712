#pragma once

#include <chrono>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "abcapf/filter_config.hpp"
#include "abcapf/kernels.hpp"
#include "abcapf/particle_cloud.hpp"
#include "abcapf/proposals.hpp"
#include "abcapf/resample.hpp"
#include "abcapf/rng.hpp"
#include "abcapf/state_space.hpp"
#include "abcapf/weights.hpp"

namespace abcapf {

/// Anything returning log p_hat(y | xi).
template <typename F>
concept LookaheadDensity = requires(const F& f, double y, double xi) {
  { f(y, xi) } -> std::convertible_to<double>;
};

struct ApfStepDiagnostics {
  double ess = 0.0;
  bool resampled = false;
  /// Second-stage weights were all log-zero and were reset to uniform.
  bool degenerate = false;
  /// Parent of each output particle (identity when not resampled).
  std::vector<std::size_t> ancestors;
};

struct ApfStep {
  ParticleCloud cloud;
  ApfStepDiagnostics diagnostics;
};

/// One step of the ABC auxiliary particle filter.
///
///  1. first-stage weights  w_i ∝ w~_i p_hat(y_t | xi(h_i)), xi = transition mean
///  2. resample by them (per policy) with a stream split off `rng`
///  3. propagate each survivor through the transition density
///  4. simulate one pseudo-observation y_sim per particle
///  5. second-stage weights w~_i ∝ K_eps(y_sim_i - y_t) / p_hat(y_t | xi(h_parent(i)))
///  6. normalise
///
/// The propagation density is the transition density, so the q / p factor of
/// the general importance weight is 1 and does not appear. Steps 3-4 use a
/// second stream split off `rng`, after the resampling stream.
template <StateSpaceModel Model, LookaheadDensity Lookahead>
ApfStep abc_apf_step(const ParticleCloud& cloud, double y, const Model& model,
                     const FilterConfig& config, const Lookahead& log_phat,
                     Rng& rng) {
  const std::size_t n = cloud.size();
  if (n == 0) throw std::invalid_argument("abc_apf_step: empty cloud");
  Rng resample_rng = rng.split();
  Rng propagate_rng = rng.split();

  std::vector<double> lookahead(n);
  std::vector<double> first(n);
  for (std::size_t i = 0; i < n; ++i) {
    lookahead[i] = log_phat(y, model.transition_mean(cloud.states[i]));
    first[i] = cloud.log_weights[i] + lookahead[i];
  }
  normalize(first);

  ApfStep out;
  auto& diag = out.diagnostics;
  diag.resampled = config.resample_policy.should_resample(ess(first));
  if (diag.resampled) {
    diag.ancestors =
        resample_indices(first, config.resample_scheme, resample_rng);
  } else {
    diag.ancestors.resize(n);
    std::iota(diag.ancestors.begin(), diag.ancestors.end(), std::size_t{0});
  }

  std::vector<double> states(n);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t parent = diag.ancestors[i];
    const double h = model.transition_sample(cloud.states[parent],
                                             propagate_rng);
    const double y_sim = model.observe_sample(h, propagate_rng);
    const double base = diag.resampled ? 0.0 : first[i];
    states[i] = h;
    weights[i] =
        base + log_kernel(config.kernel, y_sim - y) - lookahead[parent];
  }
  try {
    normalize(weights);
  } catch (const DegenerateCloudError&) {
    diag.degenerate = true;
    weights.assign(n, -std::log(static_cast<double>(n)));
  }
  diag.ess = ess(weights);
  out.cloud = ParticleCloud{std::move(states), std::move(weights), cloud.t + 1};
  return out;
}

template <StateSpaceModel Model>
ApfStep abc_apf_step(const ParticleCloud& cloud, double y, const Model& model,
                     const FilterConfig& config, Rng& rng) {
  return abc_apf_step(cloud, y, model, config, Proposal(config.proposal), rng);
}

/// Initial cloud: N draws from the model's initial law with weights 1/N.
template <StateSpaceModel Model>
ParticleCloud initial_cloud(const Model& model, std::size_t n, Rng& rng) {
  std::vector<double> states(n);
  for (auto& s : states) s = model.initial_sample(rng);
  return ParticleCloud::uniform(std::move(states), 0);
}

/// Runs the ABC-APF over y_1..y_T. filtered_mean[t-1] is the second-stage
/// weighted mean of the cloud at t. Deterministic for a given stream state.
template <StateSpaceModel Model, LookaheadDensity Lookahead>
FilterOutput abc_apf_run(std::span<const double> data, const Model& model,
                         const FilterConfig& config, const Lookahead& log_phat,
                         Rng& rng) {
  if (data.empty()) throw std::invalid_argument("abc_apf_run: empty data");
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  FilterOutput out;
  out.filtered_mean.reserve(data.size());
  out.ess_trace.reserve(data.size());
  Rng init_rng = rng.split();
  ParticleCloud cloud = initial_cloud(model, config.n_particles, init_rng);
  for (double y : data) {
    ApfStep step = abc_apf_step(cloud, y, model, config, log_phat, rng);
    cloud = std::move(step.cloud);
    out.filtered_mean.push_back(weighted_mean(cloud.states, cloud.log_weights));
    out.ess_trace.push_back(step.diagnostics.ess);
    if (step.diagnostics.resampled) ++out.resample_count;
    if (step.diagnostics.degenerate) ++out.degeneracy_count;
  }
  out.elapsed = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

template <StateSpaceModel Model>
FilterOutput abc_apf_run(std::span<const double> data, const Model& model,
                         const FilterConfig& config, Rng& rng) {
  validate(config);
  return abc_apf_run(data, model, config, Proposal(config.proposal), rng);
}

}  // namespace abcapf
