#include "abcapf/resample.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "abcapf/weights.hpp"

namespace abcapf {

namespace {

// Maps sorted positions in [0, 1) onto the cumulative weight intervals.
std::vector<std::size_t> invert_cumulative(std::span<const double> log_weights,
                                           const std::vector<double>& points) {
  // Rounding can leave the cumulative sum just short of 1; never step onto a
  // trailing zero-weight particle because of it.
  std::size_t last = log_weights.size() - 1;
  while (last > 0 && std::exp(log_weights[last]) == 0.0) --last;
  std::vector<std::size_t> out(points.size());
  double cumulative = std::exp(log_weights[0]);
  std::size_t j = 0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    while (points[k] >= cumulative && j < last) {
      ++j;
      cumulative += std::exp(log_weights[j]);
    }
    out[k] = j;
  }
  return out;
}

}  // namespace

std::vector<std::size_t> resample_indices(std::span<const double> log_weights,
                                          ResampleScheme scheme, Rng& rng) {
  const std::size_t n = log_weights.size();
  if (n == 0) throw std::invalid_argument("resample: empty weight vector");
  if (normalization_error(log_weights) > 1e-9) {
    throw std::invalid_argument("resample: weights are not normalised");
  }
  std::vector<double> points(n);
  const double dn = static_cast<double>(n);
  if (scheme == ResampleScheme::systematic) {
    const double offset = rng.uniform01();
    for (std::size_t k = 0; k < n; ++k) {
      points[k] = (static_cast<double>(k) + offset) / dn;
    }
  } else {
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      total += rng.exponential();
      points[k] = total;
    }
    total += rng.exponential();
    for (double& p : points) p /= total;
  }
  return invert_cumulative(log_weights, points);
}

ResampleResult resample(const ParticleCloud& cloud, ResampleScheme scheme,
                        Rng& rng) {
  ResampleResult result;
  result.ancestors = resample_indices(cloud.log_weights, scheme, rng);
  std::vector<double> states(cloud.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    states[i] = cloud.states[result.ancestors[i]];
  }
  result.cloud = ParticleCloud::uniform(std::move(states), cloud.t);
  return result;
}

std::string_view to_string(ResampleScheme scheme) {
  return scheme == ResampleScheme::multinomial ? "multinomial" : "systematic";
}

ResampleScheme parse_resample_scheme(std::string_view name) {
  if (name == "multinomial") return ResampleScheme::multinomial;
  if (name == "systematic") return ResampleScheme::systematic;
  throw std::invalid_argument("unknown resampling scheme '" +
                              std::string(name) + "'");
}

}  // namespace abcapf
