#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace abcapf {

/// Weighted particle approximation of the filtering distribution at time t.
/// log_weights are normalised: sum exp(log_weights) == 1.
struct ParticleCloud {
  std::vector<double> states;
  std::vector<double> log_weights;
  std::size_t t = 0;

  std::size_t size() const { return states.size(); }

  static ParticleCloud uniform(std::vector<double> states, std::size_t t = 0) {
    const double lw = -std::log(static_cast<double>(states.size()));
    ParticleCloud cloud{std::move(states), {}, t};
    cloud.log_weights.assign(cloud.states.size(), lw);
    return cloud;
  }
};

}  // namespace abcapf
