#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "abcapf/abc_smc.hpp"
#include "abcapf/filter_config.hpp"

namespace abcapf {

void validate(const FilterConfig& config) {
  if (config.n_particles < 2) {
    throw std::invalid_argument("filter: n_particles must be >= 2");
  }
  validate(config.kernel);
  validate(config.proposal);
  if (config.resample_policy.kind == ResamplePolicy::Kind::ess_threshold) {
    const double n0 = config.resample_policy.threshold;
    if (!(n0 >= 1.0 && n0 <= static_cast<double>(config.n_particles))) {
      throw std::invalid_argument("filter: ESS threshold N0 must lie in [1, N]");
    }
  }
  if (!(config.smc_percentile > 0.0 && config.smc_percentile <= 1.0)) {
    throw std::invalid_argument("filter: smc_percentile must lie in (0, 1]");
  }
}

double abc_smc_tolerance(std::span<const double> distances, double percentile) {
  const std::size_t n = distances.size();
  if (n == 0) throw std::invalid_argument("abc_smc_tolerance: no distances");
  if (!(percentile > 0.0 && percentile <= 1.0)) {
    throw std::invalid_argument("abc_smc_tolerance: percentile must lie in (0, 1]");
  }
  // The small offset keeps e.g. 0.1 * 30 = 3.0000000000000004 at k = 3.
  const double k_real = std::ceil(percentile * static_cast<double>(n) - 1e-9);
  const std::size_t k =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(k_real, 1.0)),
                              1, n);
  std::vector<double> sorted(distances.begin(), distances.end());
  for (double& d : sorted) {
    if (std::isnan(d)) d = std::numeric_limits<double>::infinity();
  }
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(k - 1),
                   sorted.end());
  return sorted[k - 1];
}

}  // namespace abcapf
