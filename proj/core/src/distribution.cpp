#include "groupent/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "groupent/numeric.hpp"

namespace groupent {

Distribution::Distribution(std::vector<double> probs, Renormalize renorm)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("Distribution: event space must be nonempty");
  }
  NeumaierSum mass;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument(
          "Distribution: probabilities must be finite and nonnegative, got " +
          std::to_string(p));
    }
    mass.add(p);
  }
  const double total = mass.value();
  if (renorm == Renormalize::Yes) {
    if (total <= 0.0) {
      throw std::invalid_argument("Distribution: zero total mass");
    }
    for (double& p : probs_) p /= total;
  } else if (std::abs(total - 1.0) > kMassTolerance) {
    // Silent renormalization would hide data errors; callers must opt in.
    throw std::invalid_argument("Distribution: mass " + std::to_string(total) +
                                " deviates from 1 beyond tolerance");
  }
}

Distribution uniform(std::size_t w) {
  if (w == 0) throw std::invalid_argument("uniform: W must be >= 1");
  return Distribution(std::vector<double>(w, 1.0 / static_cast<double>(w)));
}

Distribution product(const Distribution& a, const Distribution& b) {
  std::vector<double> out;
  out.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out.push_back(a[i] * b[j]);
    }
  }
  return Distribution(std::move(out));
}

AlphaLogSum alpha_log_sum(const Distribution& p, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("alpha_log_sum: alpha must be > 0");
  }
  // logsumexp over y_i = alpha * ln p_i, zero entries skipped.
  double ymax = -std::numeric_limits<double>::infinity();
  for (double pi : p.probs()) {
    if (pi > 0.0) ymax = std::max(ymax, alpha * std::log(pi));
  }
  NeumaierSum s;
  for (double pi : p.probs()) {
    if (pi > 0.0) s.add(std::exp(alpha * std::log(pi) - ymax));
  }
  return AlphaLogSum{alpha, ymax + std::log(s.value())};
}

Distribution powerlaw(double a, std::size_t s_max) {
  if (s_max == 0) throw std::invalid_argument("powerlaw: s_max must be >= 1");
  if (!(a >= 0.0)) throw std::invalid_argument("powerlaw: exponent must be >= 0");
  std::vector<double> w(s_max);
  NeumaierSum norm;
  // Summed from the tail so the small terms accumulate first.
  for (std::size_t s = s_max; s >= 1; --s) {
    w[s - 1] = std::pow(static_cast<double>(s), -a);
    norm.add(w[s - 1]);
  }
  const double total = norm.value();
  for (double& x : w) x /= total;
  return Distribution(std::move(w));
}

Distribution append_zero_event(const Distribution& p) {
  std::vector<double> out(p.probs().begin(), p.probs().end());
  out.push_back(0.0);
  return Distribution(std::move(out));
}

}  // namespace groupent
