#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace abcapf {

/// Two-sided one-sample Kolmogorov-Smirnov statistic sup |F_n - F| for
/// samples already sorted ascending.
double ks_statistic_sorted(std::span<const double> sorted,
                           const std::function<double(double)>& cdf);

/// As above, for CDFs too expensive to evaluate at every sample: F is computed
/// exactly at every `stride`-th order statistic (and the extremes) and
/// linearly interpolated in between. Valid for continuous, monotone F.
double ks_statistic_tabulated(std::span<const double> sorted,
                              const std::function<double(double)>& cdf,
                              std::size_t stride);

/// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_sf(double lambda);

/// Critical value of the KS statistic at significance `level` for n samples,
/// using Stephens' finite-n adjustment lambda / (sqrt(n) + 0.12 + 0.11/sqrt(n)).
double ks_critical_value(std::size_t n, double level);

}  // namespace abcapf
