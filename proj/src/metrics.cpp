#include "abcapf/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace abcapf {

namespace {

void check_lengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("metrics: estimate/truth length mismatch");
  }
  if (a.empty()) throw std::invalid_argument("metrics: empty sequences");
}

}  // namespace

double rmse(std::span<const double> estimates, std::span<const double> truth) {
  check_lengths(estimates, truth);
  double sum = 0.0;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const double d = estimates[i] - truth[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(estimates.size()));
}

double abs_error(std::span<const double> estimates,
                 std::span<const double> truth) {
  check_lengths(estimates, truth);
  double sum = 0.0;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    sum += std::abs(estimates[i] - truth[i]);
  }
  return sum / static_cast<double>(estimates.size());
}

RunMetrics score(const FilterOutput& output, const Trajectory& truth) {
  const std::span<const double> h(truth.h);
  const auto scored = h.subspan(1);
  return {rmse(output.filtered_mean, scored),
          abs_error(output.filtered_mean, scored), output.elapsed,
          output.degeneracy_count};
}

}  // namespace abcapf
