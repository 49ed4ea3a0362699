#ifndef GROUPENT_DISTRIBUTION_HPP
#define GROUPENT_DISTRIBUTION_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace groupent {

enum class Renormalize { No, Yes };

/// Finite probability vector over a W-point event space.
///
/// Invariants enforced at construction: every entry is finite and
/// nonnegative, W >= 1, and the total mass is 1 within 1e-9 (unless
/// Renormalize::Yes is passed, in which case any positive total is
/// rescaled to 1). Immutable after construction.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs,
                        Renormalize renorm = Renormalize::No);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  static constexpr double kMassTolerance = 1e-9;

 private:
  std::vector<double> probs_;
};

/// ln sum_i p_i^alpha, entries with p_i = 0 skipped.
struct AlphaLogSum {
  double alpha;
  double value;
};

/// Uniform (microcanonical) distribution on W events.
Distribution uniform(std::size_t w);

/// Independent product: entry (i,j) of the result is a[i]*b[j], laid out
/// row-major with i outer and j inner.
Distribution product(const Distribution& a, const Distribution& b);

/// Max-shifted log-space evaluation of ln sum p_i^alpha; stays accurate for
/// sharply peaked distributions whose direct power sums would underflow.
/// Requires alpha > 0.
AlphaLogSum alpha_log_sum(const Distribution& p, double alpha);

/// Normalized power law P(s) = A / s^a on s = 1..s_max.
Distribution powerlaw(double a, std::size_t s_max);

/// Copy of p with one zero-probability event appended (expansibility probe).
Distribution append_zero_event(const Distribution& p);

}  // namespace groupent

#endif
