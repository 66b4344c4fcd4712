#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace abcapf {

/// Raised when adaptive integration cannot reach the requested tolerance
/// within its panel budget.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  std::size_t initial_panels = 16;
  std::size_t max_panels = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t panels = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of f over [a, b].
/// The panel with the largest error estimate is bisected until the summed
/// error estimate drops below `abs_tol`. Throws QuadratureError when
/// `max_panels` is reached first.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options = {});

}  // namespace abcapf
