#include "abcapf/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "abcapf/kernels.hpp"

namespace abcapf {

double log_sum_exp(std::span<const double> log_values) {
  double max_v = kLogZero;
  for (double v : log_values) {
    if (!std::isnan(v)) max_v = std::max(max_v, v);
  }
  if (max_v == kLogZero) return kLogZero;
  if (std::isinf(max_v)) return max_v;  // +inf dominates
  double sum = 0.0;
  for (double v : log_values) {
    if (!std::isnan(v)) sum += std::exp(v - max_v);
  }
  return max_v + std::log(sum);
}

void normalize(std::span<double> log_weights) {
  const double total = log_sum_exp(log_weights);
  if (total == kLogZero || !std::isfinite(total)) {
    throw DegenerateCloudError(
        "normalize: no particle carries finite positive weight");
  }
  for (double& w : log_weights) {
    w = std::isnan(w) ? kLogZero : w - total;
  }
}

double ess(std::span<const double> log_weights) {
  double max_v = kLogZero;
  for (double w : log_weights) max_v = std::max(max_v, w);
  if (max_v == kLogZero) return 0.0;
  double sum_sq = 0.0;
  for (double w : log_weights) sum_sq += std::exp(2.0 * (w - max_v));
  // 1 / sum w^2 where w = exp(max_v) * exp(w - max_v)
  const double result = std::exp(-2.0 * max_v) / sum_sq;
  return std::clamp(result, 1.0, static_cast<double>(log_weights.size()));
}

double weighted_mean(std::span<const double> values,
                     std::span<const double> log_weights) {
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (log_weights[i] != kLogZero) acc += std::exp(log_weights[i]) * values[i];
  }
  return acc;
}

double normalization_error(std::span<const double> log_weights) {
  double sum = 0.0;
  for (double w : log_weights) sum += std::exp(w);
  return std::abs(sum - 1.0);
}

}  // namespace abcapf
