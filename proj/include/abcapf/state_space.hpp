#pragma once

#include <concepts>

#include "abcapf/rng.hpp"

namespace abcapf {

/// A scalar hidden Markov model the ABC filters can drive: the latent state
/// can be initialised and propagated, and observations can be simulated, but
/// the observation density is never evaluated.
template <typename M>
concept StateSpaceModel = requires(const M& m, double x, Rng& rng) {
  { m.initial_sample(rng) } -> std::convertible_to<double>;
  // E[x_t | x_{t-1}], the lookahead point of the auxiliary filter.
  { m.transition_mean(x) } -> std::convertible_to<double>;
  { m.transition_sample(x, rng) } -> std::convertible_to<double>;
  { m.observe_sample(x, rng) } -> std::convertible_to<double>;
};

}  // namespace abcapf
