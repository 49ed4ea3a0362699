#ifndef GROUPENT_ORDINAL_HPP
#define GROUPENT_ORDINAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "groupent/complexity_class.hpp"

namespace groupent {

/// Rank vector of an L-window: the permutation (rho_0, ..., rho_{L-1}) with
/// x[rho_0] <= x[rho_1] <= ... ; ties rank the earlier index lower.
struct OrdinalPattern {
  std::vector<int> ranks;
  int length;
};

inline constexpr int kMaxPatternLength = 20;  // L! fits in 64 bits up to 20

/// Ordinal pattern of a window of length >= 2.
OrdinalPattern pattern_of(std::span<const double> window);

/// Lehmer index of a rank vector in [0, L!): the factorial-number-system
/// key used by the histograms.
std::uint64_t lehmer_index(const OrdinalPattern& pattern);
OrdinalPattern pattern_from_lehmer(std::uint64_t index, int length);

double log_factorial(int length);  // ln L!

/// Histogram of the L-ordinal patterns found in a series. Dense storage for
/// small L, hashed above that; counts merge exactly, so chunked counting is
/// order-independent.
class PatternDistribution {
 public:
  explicit PatternDistribution(int length);

  int length() const { return length_; }
  std::uint64_t total_windows() const { return total_; }
  std::uint64_t allowed_count() const { return allowed_; }
  std::uint64_t count(std::uint64_t lehmer) const;

  void add(std::uint64_t lehmer, std::uint64_t n = 1);
  void merge(const PatternDistribution& other);

  /// Visit nonzero entries in ascending Lehmer order (deterministic).
  void for_each(const std::function<void(std::uint64_t, std::uint64_t)>& fn)
      const;

  /// Nonzero pattern frequencies in ascending Lehmer order.
  std::vector<double> frequencies() const;

 private:
  int length_;
  std::uint64_t total_ = 0;
  std::uint64_t allowed_ = 0;
  bool dense_;
  std::vector<std::uint64_t> table_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

/// Count patterns over windows starting at t = 0, stride, 2*stride, ...
/// Requires |series| >= L, 2 <= L <= 20, stride >= 1. With threads > 1 the
/// window range is split into contiguous chunks counted independently and
/// merged; the result is identical to the sequential count.
PatternDistribution pattern_distribution(std::span<const double> series,
                                         int length, int stride = 1,
                                         unsigned threads = 1);

/// Shannon entropy of the empirical pattern distribution.
double permutation_entropy(const PatternDistribution& pd);

/// ln(number of allowed patterns).
double topological_permutation_entropy(const PatternDistribution& pd);

/// Renyi entropy of the pattern histogram; alpha = 0 gives the topological
/// value ln A_L and alpha = 1 the Shannon value.
double renyi_of_patterns(const PatternDistribution& pd, double alpha);

struct RateRow {
  int length;
  double metric_rate;       // H*(L) / L
  double topological_rate;  // ln A_L / L
};

/// Finite-L estimates of the metric and topological entropy rates from
/// histograms at two or more ascending lengths.
std::vector<RateRow> entropy_rates(const std::vector<PatternDistribution>& pds);

/// Group permutation entropy Z*_{g,alpha} = g^-1(R_alpha) - g^-1(0), via the
/// closed forms of the class.
double group_permutation_entropy(const PatternDistribution& pd,
                                 const ComplexityClass& cls, double alpha);

/// Same quantity through the bisection inverse; independent route for tests.
double group_permutation_entropy_generic(const PatternDistribution& pd,
                                         const ComplexityClass& cls,
                                         double alpha);

struct GroupRateRow {
  int length;
  double rate;  // g^-1(R_alpha(p_L)) / L
};

std::vector<GroupRateRow> group_rates(
    const std::vector<PatternDistribution>& pds, const ComplexityClass& cls,
    double alpha);

struct CandidateFit {
  ComplexityClass::Kind kind;
  double scale;      // fitted c where the class has one, else 1
  double intercept;  // additive offset absorbing the prefactor of A_L
  double rms_residual;
  bool valid;
};

struct ClassEstimate {
  ComplexityClass::Kind best;
  double best_scale;
  bool low_confidence;
  std::vector<CandidateFit> fits;
};

/// Least-squares comparison of the observed ln A_L curve against the
/// candidate growth shapes; needs at least three usable lengths and enough
/// windows per length, otherwise the result is flagged low-confidence.
ClassEstimate estimate_complexity_class(std::span<const double> series,
                                        int l_min, int l_max);

}  // namespace groupent

#endif
