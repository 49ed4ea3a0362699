#include "groupent/process_gen.hpp"

#include <stdexcept>
#include <string>

#include "groupent/errors.hpp"
#include "groupent/rng.hpp"

namespace groupent {

std::vector<double> white_noise(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("white_noise: n must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> out(n);
  for (double& x : out) x = rng.next_double();
  return out;
}

std::vector<double> logistic_map(std::size_t n, double r, double x0,
                                 std::size_t transient) {
  if (n == 0) throw std::invalid_argument("logistic_map: n must be >= 1");
  if (!(r > 0.0 && r <= 4.0)) {
    throw std::invalid_argument("logistic_map: r must be in (0, 4]");
  }
  if (!(x0 > 0.0 && x0 < 1.0)) {
    throw std::invalid_argument("logistic_map: x0 must be in (0, 1)");
  }
  double x = x0;
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t t = 0; t < transient + n; ++t) {
    x = r * x * (1.0 - x);
    if (x == 0.0 || x == 1.0) {
      throw DegenerateOrbitError(
          "logistic_map: orbit hit an absorbing point at step " +
          std::to_string(t + 1) + "; choose a different x0");
    }
    if (t >= transient) out.push_back(x);
  }
  return out;
}

std::vector<double> add_observational_noise(std::span<const double> series,
                                            double amplitude,
                                            std::uint64_t seed) {
  if (!(amplitude >= 0.0)) {
    throw std::invalid_argument(
        "add_observational_noise: amplitude must be >= 0");
  }
  std::vector<double> out(series.begin(), series.end());
  if (amplitude == 0.0) return out;
  SplitMix64 rng(seed);
  for (double& x : out) {
    x += amplitude * (2.0 * rng.next_double() - 1.0);
  }
  return out;
}

}  // namespace groupent
