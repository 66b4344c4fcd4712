#pragma once

#include <span>
#include <stdexcept>
#include <string>

namespace abcapf {

/// Every weight in a cloud was log-zero (or NaN), so it cannot be normalised.
class DegenerateCloudError : public std::runtime_error {
 public:
  explicit DegenerateCloudError(const std::string& what)
      : std::runtime_error(what) {}
};

/// log(sum exp(x_i)); kLogZero for an empty or all-log-zero input.
/// NaN entries count as log-zero.
double log_sum_exp(std::span<const double> log_values);

/// Rescales log weights in place so that sum exp(w_i) == 1. NaN entries become
/// log-zero. Throws DegenerateCloudError if nothing finite remains.
void normalize(std::span<double> log_weights);

/// Effective sample size 1 / sum w_i^2 of normalised log weights, evaluated
/// as exp(-log_sum_exp(2 w)).
double ess(std::span<const double> log_weights);

/// sum w_i x_i for normalised log weights.
double weighted_mean(std::span<const double> values,
                     std::span<const double> log_weights);

/// |sum exp(w_i) - 1|.
double normalization_error(std::span<const double> log_weights);

}  // namespace abcapf
