#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace abcapf {

/// xoshiro256++ generator with hand-written variate transforms.
///
/// The transforms (uniform, normal, exponential) are implemented here rather
/// than through <random> distributions so that a given seed produces the same
/// bits on every standard library. Seeding is cheap, which makes `split()`
/// usable once per filter step.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next(); }

  std::uint64_t next();

  /// Uniform on the open interval (0, 1).
  double uniform01();
  /// Uniform on the open interval (lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal (Marsaglia polar method, one spare value cached).
  double normal();
  /// Exponential with rate 1.
  double exponential();

  /// Independent child stream seeded from this stream's next output.
  Rng split();

 private:
  std::array<std::uint64_t, 4> s_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Mixes (base_seed, replicate, label) into a 64-bit seed. Distinct labels or
/// replicates give unrelated streams.
std::uint64_t derive(std::uint64_t base_seed, std::uint64_t replicate,
                     std::string_view label);

}  // namespace abcapf
