#include "abcapf/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace abcapf {

void validate(const KernelSpec& spec) {
  if (!(spec.epsilon > 0.0) || !std::isfinite(spec.epsilon)) {
    throw std::invalid_argument("kernel: epsilon must be positive and finite");
  }
}

double log_kernel(const KernelSpec& spec, double u) {
  if (std::isnan(u)) return kLogZero;
  switch (spec.kind) {
    case KernelKind::gaussian: {
      const double z = u / spec.epsilon;
      return -0.5 * std::log(2.0 * std::numbers::pi) - std::log(spec.epsilon) -
             0.5 * z * z;
    }
    case KernelKind::uniform:
      return std::abs(u) <= spec.epsilon ? -std::log(2.0 * spec.epsilon)
                                         : kLogZero;
  }
  return kLogZero;
}

std::string_view to_string(KernelKind kind) {
  return kind == KernelKind::gaussian ? "gaussian" : "uniform";
}

KernelKind parse_kernel_kind(std::string_view name) {
  if (name == "gaussian") return KernelKind::gaussian;
  if (name == "uniform") return KernelKind::uniform;
  throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
}

}  // namespace abcapf
