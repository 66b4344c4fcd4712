#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "abcapf/particle_cloud.hpp"
#include "abcapf/rng.hpp"

namespace abcapf {

enum class ResampleScheme { multinomial, systematic };

/// Draws N ancestor indices, N = log_weights.size(), so that index i is
/// selected N w_i times in expectation. Multinomial uses N + 1 exponential
/// spacings to produce sorted uniforms in O(N); systematic uses one uniform
/// offset. Returned indices are non-decreasing.
/// Throws std::invalid_argument unless the weights are normalised (1e-9).
std::vector<std::size_t> resample_indices(std::span<const double> log_weights,
                                          ResampleScheme scheme, Rng& rng);

struct ResampleResult {
  ParticleCloud cloud;  // uniform weights
  std::vector<std::size_t> ancestors;
};

ResampleResult resample(const ParticleCloud& cloud, ResampleScheme scheme,
                        Rng& rng);

std::string_view to_string(ResampleScheme scheme);
ResampleScheme parse_resample_scheme(std::string_view name);

}  // namespace abcapf
