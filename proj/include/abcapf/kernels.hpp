#pragma once

#include <limits>
#include <string_view>

namespace abcapf {

/// log(0). Weight arithmetic treats it as an absorbing zero weight.
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

enum class KernelKind { gaussian, uniform };

/// ABC smoothing kernel K_eps(u) = eps^-1 K(u / eps).
struct KernelSpec {
  KernelKind kind = KernelKind::gaussian;
  double epsilon = 0.25;
};

void validate(const KernelSpec& spec);

/// gaussian: log N(u; 0, eps^2); uniform: -log(2 eps) on |u| <= eps, else
/// kLogZero. A NaN discrepancy (e.g. inf - inf) also maps to kLogZero.
double log_kernel(const KernelSpec& spec, double u);

std::string_view to_string(KernelKind kind);
KernelKind parse_kernel_kind(std::string_view name);

}  // namespace abcapf
