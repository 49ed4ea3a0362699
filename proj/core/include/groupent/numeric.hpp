#ifndef GROUPENT_NUMERIC_HPP
#define GROUPENT_NUMERIC_HPP

#include <cmath>
#include <cstddef>
#include <span>

namespace groupent {

// Neumaier-compensated accumulator. Deterministic for a fixed add order;
// used for every probability/entropy sum so results are stable for large W.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  NeumaierSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

}  // namespace groupent

#endif
