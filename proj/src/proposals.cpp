#include "abcapf/proposals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "abcapf/quadrature.hpp"

namespace abcapf {

namespace {

constexpr int kMaxSeriesTerms = 20000;
constexpr double kSeriesRelTol = 1e-12;
// Largest tolerated ratio of the biggest term to the final sum before the
// alternating series is considered too cancellation-prone.
constexpr double kCancellationLimit = 1e6;

double t_log_norm(double dof) {
  return std::lgamma(0.5 * (dof + 1.0)) - std::lgamma(0.5 * dof) -
         0.5 * std::log(dof * std::numbers::pi);
}

// log of 2 int_0^inf s^dof exp(-s^2 + z s) ds.
double log_sum_by_quadrature(double z, double dof) {
  const double peak = 0.25 * (z + std::sqrt(z * z + 8.0 * dof));
  const double log_peak = dof * std::log(peak) - peak * peak + z * peak;
  auto g = [&](double s) {
    if (s <= 0.0) return 0.0;
    return std::exp(dof * std::log(s) - s * s + z * s - log_peak);
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-13;
  opts.initial_panels = 32;
  const QuadratureResult r = integrate(g, 0.0, peak + 12.0, opts);
  return std::log(2.0) + log_peak + std::log(r.value);
}

// log sum_i Gamma((dof + 1 + i)/2) z^i / i!, evaluated as
// Gamma((dof+1)/2) * sum_i r_i with r_0 = 1.
double log_gamma_series(double z, double dof, double lg_half_dof_p1,
                        double lg_half_dof_p2) {
  const double z2 = z * z;
  double even = 1.0;
  double odd = z * std::exp(lg_half_dof_p2 - lg_half_dof_p1);
  double sum = even + odd;
  double max_term = std::max(1.0, std::abs(odd));
  bool converged = false;
  for (int i = 0; i < kMaxSeriesTerms; i += 2) {
    const double di = static_cast<double>(i);
    const double even_ratio =
        z2 * 0.5 * (dof + 1.0 + di) / ((di + 1.0) * (di + 2.0));
    const double odd_ratio =
        z2 * 0.5 * (dof + 2.0 + di) / ((di + 2.0) * (di + 3.0));
    even *= even_ratio;
    odd *= odd_ratio;
    sum += even + odd;
    max_term = std::max({max_term, std::abs(even), std::abs(odd)});
    if (!std::isfinite(sum)) break;
    if (even_ratio < 1.0 && odd_ratio < 1.0 &&
        std::abs(even) + std::abs(odd) <= kSeriesRelTol * std::abs(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ProposalEvaluationError(
        "non-central t series did not converge (z = " + std::to_string(z) +
        ", dof = " + std::to_string(dof) + ")");
  }
  if (z < 0.0 && (sum <= 0.0 || max_term > kCancellationLimit * sum)) {
    return log_sum_by_quadrature(z, dof);
  }
  return lg_half_dof_p1 + std::log(sum);
}

double noncentral_t_logpdf_impl(double x, double dof, double ncp,
                                double lg_half_dof, double lg_half_dof_p1,
                                double lg_half_dof_p2) {
  if (!std::isfinite(x)) return -std::numeric_limits<double>::infinity();
  const double q = dof + x * x;
  const double z = ncp * x * std::sqrt(2.0 / q);
  return 0.5 * dof * std::log(dof) - 0.5 * ncp * ncp -
         0.5 * std::log(std::numbers::pi) - lg_half_dof -
         0.5 * (dof + 1.0) * std::log(q) +
         log_gamma_series(z, dof, lg_half_dof_p1, lg_half_dof_p2);
}

}  // namespace

void validate(const ProposalSpec& spec) {
  if (!(spec.dof > 0.0) || !std::isfinite(spec.dof)) {
    throw std::invalid_argument("proposal: dof must be positive and finite");
  }
}

double student_t_logpdf(double x, double dof) {
  return t_log_norm(dof) - 0.5 * (dof + 1.0) * std::log1p(x * x / dof);
}

double noncentral_t_logpdf(double x, double dof, double ncp) {
  if (!(dof > 0.0)) throw std::invalid_argument("noncentral t: dof must be > 0");
  return noncentral_t_logpdf_impl(x, dof, ncp, std::lgamma(0.5 * dof),
                                  std::lgamma(0.5 * (dof + 1.0)),
                                  std::lgamma(0.5 * (dof + 2.0)));
}

Proposal::Proposal(const ProposalSpec& spec) : spec_(spec) {
  validate(spec);
  t_log_norm_ = t_log_norm(spec.dof);
  lg_half_dof_ = std::lgamma(0.5 * spec.dof);
  lg_half_dof_p1_ = std::lgamma(0.5 * (spec.dof + 1.0));
  lg_half_dof_p2_ = std::lgamma(0.5 * (spec.dof + 2.0));
}

double Proposal::operator()(double y, double xi) const {
  const double dof = spec_.dof;
  switch (spec_.kind) {
    case ProposalKind::central_t:
      return t_log_norm_ - 0.5 * (dof + 1.0) * std::log1p(y * y / dof);
    case ProposalKind::shifted_t: {
      const double u = y - xi;
      return t_log_norm_ - 0.5 * (dof + 1.0) * std::log1p(u * u / dof);
    }
    case ProposalKind::noncentral_t:
      return noncentral_t_logpdf_impl(y, dof, xi, lg_half_dof_,
                                      lg_half_dof_p1_, lg_half_dof_p2_);
  }
  return 0.0;
}

double log_phat(const ProposalSpec& spec, double y, double xi) {
  return Proposal(spec)(y, xi);
}

std::string_view to_string(ProposalKind kind) {
  switch (kind) {
    case ProposalKind::central_t:
      return "central-t";
    case ProposalKind::shifted_t:
      return "shifted-t";
    case ProposalKind::noncentral_t:
      return "noncentral-t";
  }
  return "";
}

ProposalKind parse_proposal_kind(std::string_view name) {
  if (name == "central-t") return ProposalKind::central_t;
  if (name == "shifted-t") return ProposalKind::shifted_t;
  if (name == "noncentral-t") return ProposalKind::noncentral_t;
  throw std::invalid_argument("unknown proposal '" + std::string(name) + "'");
}

}  // namespace abcapf
