#include "groupent/lambert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace groupent {

namespace {

double initial_guess(double x) {
  if (x > 1e15) {
    const double l = std::log(x);
    return l - std::log(l);
  }
  if (x >= 0.0) return std::log1p(x);
  // Branch-point series for the defensively supported sliver [-1/e, 0).
  const double q = 2.0 * (1.0 + std::exp(1.0) * x);
  if (q <= 0.0) return -1.0;
  return -1.0 + std::sqrt(q) * (1.0 - std::sqrt(q) / 3.0);
}

}  // namespace

double lambert_w0(double x) {
  static const double kBranchPoint = -std::exp(-1.0);
  if (!(x >= kBranchPoint)) {
    throw std::domain_error("lambert_w0: x = " + std::to_string(x) +
                            " below branch point -1/e");
  }
  if (x == 0.0) return 0.0;
  if (x < kBranchPoint + 1e-12) {
    // Halley degenerates at w = -1 (f' vanishes); the branch series is
    // already at full attainable precision this close to -1/e.
    return initial_guess(x);
  }

  double w = initial_guess(x);
  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    // Halley step: f' = (w+1)e^w, f'' = (w+2)e^w.
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0) break;
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 4.0 * 2.220446049250313e-16 * (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

LambertResult lambert_w0_result(double x) {
  const double w = lambert_w0(x);
  return LambertResult{w, std::abs(w * std::exp(w) - x)};
}

}  // namespace groupent
