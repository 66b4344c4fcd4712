#pragma once

#include <cstddef>
#include <vector>

#include "abcapf/kernels.hpp"
#include "abcapf/proposals.hpp"
#include "abcapf/resample.hpp"

namespace abcapf {

/// When to resample: at every step, or only when the ESS drops below N0.
struct ResamplePolicy {
  enum class Kind { every_step, ess_threshold };

  Kind kind = Kind::every_step;
  double threshold = 0.0;  // N0, used by ess_threshold only

  static ResamplePolicy every_step() { return {}; }
  static ResamplePolicy ess_threshold(double n0) {
    return {Kind::ess_threshold, n0};
  }

  bool should_resample(double ess) const {
    return kind == Kind::every_step || ess < threshold;
  }
};

struct FilterConfig {
  std::size_t n_particles = 5000;
  KernelSpec kernel{};
  ProposalSpec proposal{};
  ResamplePolicy resample_policy = ResamplePolicy::every_step();
  ResampleScheme resample_scheme = ResampleScheme::multinomial;
  /// Fraction of nearest pseudo-observations kept by ABC-SMC.
  double smc_percentile = 0.25;
};

/// Checks N >= 2, N0 in [1, N], P_eps in (0, 1], and the kernel/proposal.
/// P_eps = 1 is accepted as the degenerate keep-everything case.
void validate(const FilterConfig& config);

struct FilterOutput {
  std::vector<double> filtered_mean;  // E[h_t | y_1:t], t = 1..T
  std::vector<double> ess_trace;      // ESS of the normalised weights at t
  std::size_t resample_count = 0;
  std::size_t degeneracy_count = 0;
  double elapsed = 0.0;  // wall-clock seconds
};

}  // namespace abcapf
