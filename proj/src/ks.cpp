#include "abcapf/ks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace abcapf {

namespace {

double ks_from_values(std::span<const double> cdf_values) {
  const double n = static_cast<double>(cdf_values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < cdf_values.size(); ++i) {
    const double f = cdf_values[i];
    const double di = static_cast<double>(i);
    d = std::max({d, (di + 1.0) / n - f, f - di / n});
  }
  return d;
}

}  // namespace

double ks_statistic_sorted(std::span<const double> sorted,
                           const std::function<double(double)>& cdf) {
  if (sorted.empty()) throw std::invalid_argument("ks: no samples");
  std::vector<double> values(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) values[i] = cdf(sorted[i]);
  return ks_from_values(values);
}

double ks_statistic_tabulated(std::span<const double> sorted,
                              const std::function<double(double)>& cdf,
                              std::size_t stride) {
  if (sorted.empty()) throw std::invalid_argument("ks: no samples");
  if (stride == 0) throw std::invalid_argument("ks: stride must be >= 1");
  const std::size_t n = sorted.size();
  std::vector<std::size_t> knots;
  for (std::size_t i = 0; i < n; i += stride) knots.push_back(i);
  if (knots.back() != n - 1) knots.push_back(n - 1);

  std::vector<double> values(n);
  std::vector<double> knot_values(knots.size());
  for (std::size_t k = 0; k < knots.size(); ++k) {
    knot_values[k] = cdf(sorted[knots[k]]);
  }
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const std::size_t lo = knots[k];
    const std::size_t hi = knots[k + 1];
    const double x0 = sorted[lo];
    const double x1 = sorted[hi];
    for (std::size_t i = lo; i <= hi; ++i) {
      const double frac = x1 > x0 ? (sorted[i] - x0) / (x1 - x0) : 0.0;
      values[i] = knot_values[k] + frac * (knot_values[k + 1] - knot_values[k]);
    }
  }
  if (knots.size() == 1) values[0] = knot_values[0];
  return ks_from_values(values);
}

double kolmogorov_sf(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;  // the alternating series is poor here; Q > 1 - 1e-20
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double ks_critical_value(std::size_t n, double level) {
  if (n == 0) throw std::invalid_argument("ks: n must be >= 1");
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("ks: level must lie in (0, 1)");
  }
  double lo = 0.2;
  double hi = 5.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_sf(mid) > level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double root_n = std::sqrt(static_cast<double>(n));
  return 0.5 * (lo + hi) / (root_n + 0.12 + 0.11 / root_n);
}

}  // namespace abcapf
