#pragma once

#include <cstddef>
#include <span>

#include "abcapf/filter_config.hpp"
#include "abcapf/svm.hpp"

namespace abcapf {

double rmse(std::span<const double> estimates, std::span<const double> truth);
double abs_error(std::span<const double> estimates,
                 std::span<const double> truth);

struct RunMetrics {
  double rmse = 0.0;
  double ae = 0.0;
  double elapsed = 0.0;
  std::size_t degeneracy_count = 0;
};

/// Scores filtered means against h_1..h_T; h_0 has no filtered estimate and
/// is excluded.
RunMetrics score(const FilterOutput& output, const Trajectory& truth);

}  // namespace abcapf
