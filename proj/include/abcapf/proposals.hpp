#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abcapf {

/// First-stage lookahead densities p_hat(y_t | xi) for the auxiliary filter,
/// all Student t with `dof` degrees of freedom:
///
///   central_t     f_t(y)            ignores the state
///   shifted_t     f_t(y - xi)
///   noncentral_t  non-central t density at y with non-centrality xi
///
/// xi is the transition mean E[h_t | h_{t-1}]. Heavier tails than the ABC
/// kernel keep the second-stage ratio K_eps / p_hat bounded.
enum class ProposalKind { central_t, shifted_t, noncentral_t };

struct ProposalSpec {
  ProposalKind kind = ProposalKind::shifted_t;
  double dof = 2.0;
};

/// The non-central t series failed to converge or overflowed.
class ProposalEvaluationError : public std::runtime_error {
 public:
  explicit ProposalEvaluationError(const std::string& what)
      : std::runtime_error(what) {}
};

void validate(const ProposalSpec& spec);

double student_t_logpdf(double x, double dof);

/// Log density of the non-central t with `dof` degrees of freedom and
/// non-centrality `ncp`, from the series
///
///   f(x) = dof^(dof/2) e^(-ncp^2/2) / (sqrt(pi) Gamma(dof/2) (dof + x^2)^((dof+1)/2))
///          * sum_i Gamma((dof + 1 + i)/2) z^i / i!,   z = ncp x sqrt(2 / (dof + x^2)),
///
/// summed until the term ratio falls below 1e-12. When z < 0 and the
/// alternating sum loses more than six digits to cancellation, the sum is
/// replaced by its integral form 2 int_0^inf s^dof exp(-s^2 + z s) ds.
double noncentral_t_logpdf(double x, double dof, double ncp);

/// Evaluates one ProposalSpec with its normalising constants cached.
class Proposal {
 public:
  explicit Proposal(const ProposalSpec& spec);

  double operator()(double y, double xi) const;
  const ProposalSpec& spec() const { return spec_; }

 private:
  ProposalSpec spec_;
  double t_log_norm_ = 0.0;
  double lg_half_dof_ = 0.0;     // lgamma(dof / 2)
  double lg_half_dof_p1_ = 0.0;  // lgamma((dof + 1) / 2)
  double lg_half_dof_p2_ = 0.0;  // lgamma((dof + 2) / 2)
};

double log_phat(const ProposalSpec& spec, double y, double xi);

std::string_view to_string(ProposalKind kind);
ProposalKind parse_proposal_kind(std::string_view name);

}  // namespace abcapf
