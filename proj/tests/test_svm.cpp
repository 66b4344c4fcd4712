#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "abcapf/ks.hpp"
#include "abcapf/rng.hpp"
#include "abcapf/stable.hpp"
#include "abcapf/svm.hpp"
#include "support/oracles.hpp"

using namespace abcapf;

namespace {

SvmParams reference() { return SvmParams(-0.2, 0.95, 0.6, 1.75, 0.1, 0.8); }

}  // namespace

TEST(SvmParams, Validation) {
  EXPECT_THROW(SvmParams(0, 1.0, 0.5, 1.5, 0, 1), std::invalid_argument);
  EXPECT_THROW(SvmParams(0, -1.2, 0.5, 1.5, 0, 1), std::invalid_argument);
  EXPECT_THROW(SvmParams(0, 0.5, 0.0, 1.5, 0, 1), std::invalid_argument);
  EXPECT_THROW(SvmParams(0, 0.5, 0.5, 1.5, 0, 0), std::invalid_argument);
  EXPECT_THROW(SvmParams(0, 0.5, 0.5, 2.5, 0, 1), std::invalid_argument);
  EXPECT_THROW(SvmParams(NAN, 0.5, 0.5, 1.5, 0, 1), std::invalid_argument);
  const auto p = reference();
  EXPECT_DOUBLE_EQ(p.obs_noise().gamma(), 0.8);
  EXPECT_DOUBLE_EQ(p.obs_noise().delta(), 0.0);
}

TEST(InitialSample, StationaryMoments) {
  const SvmParams p(0.0, 0.9, 0.2, 1.75, 0.1, 0.8);
  Rng rng(1);
  std::vector<double> xs(100'000);
  for (auto& x : xs) x = initial_sample(p, rng);
  EXPECT_NEAR(oracle::mean(xs), 0.0, 0.01);
  EXPECT_NEAR(oracle::variance(xs), 0.04 / 0.19, 0.01);
  EXPECT_NEAR(reference().stationary_mean(), -4.0, 1e-12);
}

TEST(InitialSample, WhiteNoiseCaseIsStandardNormal) {
  const SvmParams p(0.0, 0.0, 1.0, 1.75, 0.1, 0.8);
  Rng rng(2);
  std::vector<double> xs(100'000);
  for (auto& x : xs) x = initial_sample(p, rng);
  std::sort(xs.begin(), xs.end());
  const double d = ks_statistic_sorted(
      xs, [](double x) { return oracle::normal_cdf(x, 0.0, 1.0); });
  EXPECT_LT(d, ks_critical_value(xs.size(), 0.01));
}

TEST(TransitionMean, Examples) {
  EXPECT_NEAR(transition_mean(reference(), -4.0), -4.0, 1e-14);
  EXPECT_DOUBLE_EQ(transition_mean(SvmParams(0, 0.9, 1, 2, 0, 1), 1.0), 0.9);
  EXPECT_DOUBLE_EQ(transition_mean(SvmParams(1, 0.0, 1, 2, 0, 1), 7.0), 1.0);
}

TEST(TransitionSample, Spread) {
  const auto p = reference();
  Rng rng(3);
  std::vector<double> xs(100'000);
  for (auto& x : xs) x = transition_sample(p, 1.5, rng);
  EXPECT_NEAR(std::sqrt(oracle::variance(xs)), 0.6, 0.01);
  EXPECT_NEAR(oracle::mean(xs), transition_mean(p, 1.5), 0.01);

  const SvmParams tight(0.3, 0.5, 1e-9, 1.75, 0.1, 0.8);
  EXPECT_NEAR(transition_sample(tight, 2.0, rng), 1.3, 1e-7);
}

TEST(TransitionSample, PathVariance) {
  const SvmParams p(0.0, 0.95, 0.6, 1.75, 0.1, 0.8);
  Rng rng(4);
  double h = initial_sample(p, rng);
  std::vector<double> path(100'000);
  for (auto& x : path) x = h = transition_sample(p, h, rng);
  EXPECT_NEAR(oracle::variance(path), 0.36 / (1 - 0.9025), 0.05 * 3.692);
}

TEST(TransitionLogpdf, Examples) {
  const SvmParams unit(0.0, 0.5, 1.0, 2.0, 0.0, 1.0);
  const double peak = transition_logpdf(unit, transition_mean(unit, 2.0), 2.0);
  EXPECT_NEAR(peak, -0.5 * std::log(2 * std::numbers::pi), 1e-14);
  EXPECT_NEAR(transition_logpdf(unit, transition_mean(unit, 2.0) + 1.0, 2.0),
              peak - 0.5, 1e-14);
  EXPECT_NEAR(transition_logpdf(reference(), -3.0, -4.0), -1.7970017983275709,
              1e-13);
}

TEST(ObserveSample, GaussianNoiseVariance) {
  const SvmParams p(0.0, 0.5, 1.0, 2.0, 0.0, 1.0);
  Rng rng(5);
  std::vector<double> ys(200'000);
  for (auto& y : ys) y = observe_sample(p, 0.0, rng);
  EXPECT_NEAR(oracle::variance(ys), 2.0, 0.05);
}

TEST(ObserveSample, VolatilityScalesQuantiles) {
  const auto p = reference();
  const double c = 0.7;
  Rng a(6);
  Rng b(6);
  std::vector<double> lo(50'000);
  std::vector<double> hi(50'000);
  for (auto& y : lo) y = std::abs(observe_sample(p, 0.0, a));
  for (auto& y : hi) y = std::abs(observe_sample(p, 2 * c, b));
  std::sort(lo.begin(), lo.end());
  std::sort(hi.begin(), hi.end());
  for (std::size_t q : {12'500u, 25'000u, 37'500u}) {
    EXPECT_NEAR(hi[q] / lo[q], std::exp(c), 1e-12);
  }
}

TEST(ObserveSample, MatchesNumericCdf) {
  const auto p = reference();
  Rng rng(7);
  std::vector<double> ys(100'000);
  for (auto& y : ys) y = observe_sample(p, 0.0, rng);
  std::sort(ys.begin(), ys.end());
  const StableParams noise(1.75, 0.1, 0.8);
  const double d = ks_statistic_tabulated(
      ys, [&](double x) { return cdf_numeric(noise, x, 1e-9); }, 50);
  EXPECT_LT(d, ks_critical_value(ys.size(), 0.01));
}

TEST(Simulate, ShapeAndDeterminism) {
  const auto a = simulate(reference(), 500, 99);
  EXPECT_EQ(a.h.size(), 501u);
  EXPECT_EQ(a.y.size(), 500u);
  EXPECT_EQ(a.horizon(), 500u);
  EXPECT_EQ(a.seed, 99u);
  for (double v : a.h) EXPECT_TRUE(std::isfinite(v));
  for (double v : a.y) EXPECT_TRUE(std::isfinite(v));
  const auto b = simulate(reference(), 500, 99);
  EXPECT_EQ(a.h, b.h);
  EXPECT_EQ(a.y, b.y);
  const auto c = simulate(reference(), 500, 100);
  EXPECT_NE(a.y, c.y);
  EXPECT_THROW(simulate(reference(), 0, 1), std::invalid_argument);
}

TEST(Simulate, QuietModelStaysAtStationaryMean) {
  const SvmParams p(-0.2, 0.95, 1e-9, 1.75, 0.1, 1e-9);
  const auto traj = simulate(p, 200, 3);
  for (double h : traj.h) EXPECT_NEAR(h, -4.0, 1e-6);
  for (double y : traj.y) EXPECT_LT(std::abs(y), 1e-5);
}

TEST(Simulate, MatchesModelClass) {
  const auto p = reference();
  const SvmModel model(p);
  const auto traj = simulate(p, 50, 12);
  Rng rng(12);
  double h = model.initial_sample(rng);
  EXPECT_EQ(h, traj.h[0]);
  for (std::size_t t = 1; t <= 50; ++t) {
    h = model.transition_sample(h, rng);
    EXPECT_EQ(h, traj.h[t]);
    EXPECT_EQ(model.observe_sample(h, rng), traj.y[t - 1]);
  }
}

TEST(SvmProperty, LagOneAutocorrelation) {
  const auto traj = simulate(reference(), 100'000, 8);
  const auto& h = traj.h;
  const double m = oracle::mean(h);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t t = 0; t < h.size(); ++t) {
    den += (h[t] - m) * (h[t] - m);
    if (t > 0) num += (h[t] - m) * (h[t - 1] - m);
  }
  EXPECT_NEAR(num / den, 0.95, 0.03);
}

TEST(SvmProperty, RescaledResidualsAreStableNoise) {
  const auto traj = simulate(reference(), 100'000, 9);
  std::vector<double> v(traj.horizon());
  for (std::size_t t = 1; t <= traj.horizon(); ++t) {
    v[t - 1] = traj.y[t - 1] / std::exp(traj.h[t] / 2.0);
  }
  std::sort(v.begin(), v.end());
  const StableParams noise(1.75, 0.1, 0.8);
  const double d = ks_statistic_tabulated(
      v, [&](double x) { return cdf_numeric(noise, x, 1e-9); }, 50);
  EXPECT_LT(d, ks_critical_value(v.size(), 0.01));
}
