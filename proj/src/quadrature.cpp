#include "abcapf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace abcapf {

namespace {

// Kronrod nodes on [0, 1]; odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a,
                    double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * fsum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * fsum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options) {
  if (!(options.abs_tol > 0.0)) {
    throw std::invalid_argument("integrate: abs_tol must be positive");
  }
  if (a == b) return {};
  const std::size_t initial = std::max<std::size_t>(1, options.initial_panels);

  std::priority_queue<Panel> queue;
  double total = 0.0;
  double error = 0.0;
  const double width = (b - a) / static_cast<double>(initial);
  for (std::size_t k = 0; k < initial; ++k) {
    const double lo = a + width * static_cast<double>(k);
    const double hi = (k + 1 == initial) ? b : lo + width;
    Panel p = gauss_kronrod(f, lo, hi);
    total += p.value;
    error += p.error;
    queue.push(p);
  }

  std::size_t panels = initial;
  while (error > options.abs_tol) {
    if (panels >= options.max_panels) {
      std::ostringstream msg;
      msg << "integrate: no convergence on [" << a << ", " << b << "] after "
          << panels << " panels (error estimate " << error << ", tolerance "
          << options.abs_tol << ")";
      throw QuadratureError(msg.str());
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
    // Running sums drift; refresh them from the queue now and then.
    if (panels % 256 == 0) {
      std::vector<Panel> all;
      all.reserve(queue.size());
      total = 0.0;
      error = 0.0;
      while (!queue.empty()) {
        all.push_back(queue.top());
        total += all.back().value;
        error += all.back().error;
        queue.pop();
      }
      for (const auto& p : all) queue.push(p);
    }
  }
  return {total, error, panels};
}

}  // namespace abcapf
