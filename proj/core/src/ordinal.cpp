#include "groupent/ordinal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "groupent/lambert.hpp"
#include "groupent/numeric.hpp"

namespace groupent {

namespace {

constexpr int kDenseLimit = 9;  // 9! = 362880 slots; dense arrays below this

const std::array<std::uint64_t, 21> kFactorial = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (int i = 1; i <= 20; ++i) f[i] = f[i - 1] * static_cast<std::uint64_t>(i);
  return f;
}();

void check_length(int length) {
  if (length < 2 || length > kMaxPatternLength) {
    throw std::invalid_argument("ordinal: pattern length must be in [2, 20], got " +
                                std::to_string(length));
  }
}

// Lehmer index straight from the window, tie-stable, no allocation.
std::uint64_t window_lehmer(const double* x, int length) {
  std::array<int, kMaxPatternLength> ranks;
  // Insertion sort of indices by (value, index); stable by construction.
  int count = 0;
  for (int i = 0; i < length; ++i) {
    int pos = count;
    while (pos > 0 && x[ranks[pos - 1]] > x[i]) --pos;
    for (int m = count; m > pos; --m) ranks[m] = ranks[m - 1];
    ranks[pos] = i;
    ++count;
  }
  std::uint64_t code = 0;
  for (int i = 0; i < length; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < length; ++j) {
      smaller_after += (ranks[j] < ranks[i]);
    }
    code += static_cast<std::uint64_t>(smaller_after) *
            kFactorial[length - 1 - i];
  }
  return code;
}

}  // namespace

OrdinalPattern pattern_of(std::span<const double> window) {
  check_length(static_cast<int>(window.size()));
  const int length = static_cast<int>(window.size());
  std::vector<int> ranks(length);
  for (int i = 0; i < length; ++i) ranks[i] = i;
  std::stable_sort(ranks.begin(), ranks.end(),
                   [&](int a, int b) { return window[a] < window[b]; });
  return OrdinalPattern{std::move(ranks), length};
}

std::uint64_t lehmer_index(const OrdinalPattern& pattern) {
  const int length = pattern.length;
  check_length(length);
  std::uint64_t code = 0;
  for (int i = 0; i < length; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < length; ++j) {
      smaller_after += (pattern.ranks[j] < pattern.ranks[i]);
    }
    code += static_cast<std::uint64_t>(smaller_after) *
            kFactorial[length - 1 - i];
  }
  return code;
}

OrdinalPattern pattern_from_lehmer(std::uint64_t index, int length) {
  check_length(length);
  if (index >= kFactorial[length]) {
    throw std::invalid_argument("pattern_from_lehmer: index out of range");
  }
  std::vector<int> avail(length);
  for (int i = 0; i < length; ++i) avail[i] = i;
  std::vector<int> ranks(length);
  for (int i = 0; i < length; ++i) {
    const std::uint64_t f = kFactorial[length - 1 - i];
    const int digit = static_cast<int>(index / f);
    index %= f;
    ranks[i] = avail[digit];
    avail.erase(avail.begin() + digit);
  }
  return OrdinalPattern{std::move(ranks), length};
}

double log_factorial(int length) {
  return std::lgamma(static_cast<double>(length) + 1.0);
}

PatternDistribution::PatternDistribution(int length) : length_(length) {
  check_length(length);
  dense_ = length <= kDenseLimit;
  if (dense_) table_.assign(kFactorial[length], 0);
}

std::uint64_t PatternDistribution::count(std::uint64_t lehmer) const {
  if (dense_) return table_[lehmer];
  const auto it = sparse_.find(lehmer);
  return it == sparse_.end() ? 0 : it->second;
}

void PatternDistribution::add(std::uint64_t lehmer, std::uint64_t n) {
  if (n == 0) return;
  std::uint64_t& slot = dense_ ? table_[lehmer] : sparse_[lehmer];
  if (slot == 0) ++allowed_;
  slot += n;
  total_ += n;
}

void PatternDistribution::merge(const PatternDistribution& other) {
  if (other.length_ != length_) {
    throw std::invalid_argument("PatternDistribution::merge: length mismatch");
  }
  other.for_each([this](std::uint64_t key, std::uint64_t n) { add(key, n); });
}

void PatternDistribution::for_each(
    const std::function<void(std::uint64_t, std::uint64_t)>& fn) const {
  if (dense_) {
    for (std::uint64_t key = 0; key < table_.size(); ++key) {
      if (table_[key] != 0) fn(key, table_[key]);
    }
    return;
  }
  std::vector<std::uint64_t> keys;
  keys.reserve(sparse_.size());
  for (const auto& [key, n] : sparse_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  for (std::uint64_t key : keys) fn(key, sparse_.at(key));
}

std::vector<double> PatternDistribution::frequencies() const {
  if (total_ == 0) {
    throw std::invalid_argument("PatternDistribution: empty histogram");
  }
  std::vector<double> freq;
  freq.reserve(allowed_);
  const double total = static_cast<double>(total_);
  for_each([&](std::uint64_t, std::uint64_t n) {
    freq.push_back(static_cast<double>(n) / total);
  });
  return freq;
}

PatternDistribution pattern_distribution(std::span<const double> series,
                                         int length, int stride,
                                         unsigned threads) {
  check_length(length);
  if (stride < 1) {
    throw std::invalid_argument("pattern_distribution: stride must be >= 1");
  }
  if (series.size() < static_cast<std::size_t>(length)) {
    throw std::invalid_argument(
        "pattern_distribution: series shorter than the pattern length");
  }
  const std::size_t num_windows =
      (series.size() - static_cast<std::size_t>(length)) /
          static_cast<std::size_t>(stride) +
      1;

  auto count_range = [&](std::size_t first, std::size_t last,
                         PatternDistribution& out) {
    for (std::size_t wdx = first; wdx < last; ++wdx) {
      const std::size_t t = wdx * static_cast<std::size_t>(stride);
      out.add(window_lehmer(series.data() + t, length));
    }
  };

  PatternDistribution result(length);
  if (threads <= 1 || num_windows < 4096) {
    count_range(0, num_windows, result);
    return result;
  }

  const unsigned used = std::min<unsigned>(
      threads, static_cast<unsigned>(num_windows / 2048) + 1);
  std::vector<PatternDistribution> partial(used, PatternDistribution(length));
  std::vector<std::thread> workers;
  workers.reserve(used);
  const std::size_t chunk = (num_windows + used - 1) / used;
  for (unsigned t = 0; t < used; ++t) {
    const std::size_t first = t * chunk;
    const std::size_t last = std::min(num_windows, first + chunk);
    if (first >= last) break;
    workers.emplace_back(count_range, first, last, std::ref(partial[t]));
  }
  for (std::thread& t : workers) t.join();
  for (const PatternDistribution& part : partial) result.merge(part);
  return result;
}

double permutation_entropy(const PatternDistribution& pd) {
  if (pd.total_windows() == 0) {
    throw std::invalid_argument("permutation_entropy: empty histogram");
  }
  const double total = static_cast<double>(pd.total_windows());
  NeumaierSum s;
  pd.for_each([&](std::uint64_t, std::uint64_t n) {
    s.add(static_cast<double>(n) * std::log(static_cast<double>(n)));
  });
  return std::log(total) - s.value() / total;
}

double topological_permutation_entropy(const PatternDistribution& pd) {
  if (pd.total_windows() == 0) {
    throw std::invalid_argument(
        "topological_permutation_entropy: empty histogram");
  }
  return std::log(static_cast<double>(pd.allowed_count()));
}

double renyi_of_patterns(const PatternDistribution& pd, double alpha) {
  if (pd.total_windows() == 0) {
    throw std::invalid_argument("renyi_of_patterns: empty histogram");
  }
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("renyi_of_patterns: alpha must be >= 0");
  }
  if (alpha == 0.0) return topological_permutation_entropy(pd);
  if (alpha == 1.0) return permutation_entropy(pd);
  // logsumexp over alpha * ln(n/total).
  const double log_total = std::log(static_cast<double>(pd.total_windows()));
  double ymax = -std::numeric_limits<double>::infinity();
  pd.for_each([&](std::uint64_t, std::uint64_t n) {
    ymax = std::max(ymax,
                    alpha * (std::log(static_cast<double>(n)) - log_total));
  });
  NeumaierSum s;
  pd.for_each([&](std::uint64_t, std::uint64_t n) {
    s.add(std::exp(alpha * (std::log(static_cast<double>(n)) - log_total) -
                   ymax));
  });
  return (ymax + std::log(s.value())) / (1.0 - alpha);
}

std::vector<RateRow> entropy_rates(
    const std::vector<PatternDistribution>& pds) {
  if (pds.size() < 2) {
    throw std::invalid_argument("entropy_rates: need at least two lengths");
  }
  std::vector<RateRow> rows;
  rows.reserve(pds.size());
  int prev = 0;
  for (const PatternDistribution& pd : pds) {
    if (pd.length() <= prev) {
      throw std::invalid_argument("entropy_rates: lengths must ascend");
    }
    prev = pd.length();
    const double l = static_cast<double>(pd.length());
    rows.push_back(RateRow{pd.length(), permutation_entropy(pd) / l,
                           topological_permutation_entropy(pd) / l});
  }
  return rows;
}

double group_permutation_entropy(const PatternDistribution& pd,
                                 const ComplexityClass& cls, double alpha) {
  const double r = renyi_of_patterns(pd, alpha);
  switch (cls.kind) {
    case ComplexityClass::Kind::Exponential:
      return r / cls.c;
    case ComplexityClass::Kind::Factorial:
      return std::expm1(lambert_w0(r));
    case ComplexityClass::Kind::ScaledFactorial:
      return std::expm1(lambert_w0(r / cls.c));
    case ComplexityClass::Kind::IteratedLog:
      return class_g_inverse(cls, r) - class_t0(cls);
  }
  throw std::invalid_argument("group_permutation_entropy: unknown class");
}

double group_permutation_entropy_generic(const PatternDistribution& pd,
                                         const ComplexityClass& cls,
                                         double alpha) {
  const double r = renyi_of_patterns(pd, alpha);
  return class_g_inverse_generic(cls, r) - class_t0(cls);
}

std::vector<GroupRateRow> group_rates(
    const std::vector<PatternDistribution>& pds, const ComplexityClass& cls,
    double alpha) {
  if (pds.size() < 2) {
    throw std::invalid_argument("group_rates: need at least two lengths");
  }
  std::vector<GroupRateRow> rows;
  rows.reserve(pds.size());
  int prev = 0;
  for (const PatternDistribution& pd : pds) {
    if (pd.length() <= prev) {
      throw std::invalid_argument("group_rates: lengths must ascend");
    }
    prev = pd.length();
    const double r = renyi_of_patterns(pd, alpha);
    rows.push_back(GroupRateRow{
        pd.length(),
        class_g_inverse(cls, r) / static_cast<double>(pd.length())});
  }
  return rows;
}

ClassEstimate estimate_complexity_class(std::span<const double> series,
                                        int l_min, int l_max) {
  if (l_min < 2 || l_max > kDenseLimit || l_min > l_max) {
    throw std::invalid_argument(
        "estimate_complexity_class: need 2 <= l_min <= l_max <= 9");
  }
  constexpr std::uint64_t kMinWindows = 100;

  std::vector<double> ls, ys;  // usable lengths and observed ln A_L
  bool starved = false;
  for (int length = l_min; length <= l_max; ++length) {
    if (series.size() < static_cast<std::size_t>(length)) {
      starved = true;
      break;
    }
    const PatternDistribution pd = pattern_distribution(series, length);
    if (pd.total_windows() < kMinWindows) starved = true;
    ls.push_back(static_cast<double>(length));
    ys.push_back(std::log(static_cast<double>(pd.allowed_count())));
  }

  // ln A_L ~ g(L) + const; each candidate is fit with an intercept plus the
  // class scale where it has one. The factorial reference is ln L! itself
  // (the exact all-patterns curve), which L*ln L only reaches asymptotically.
  struct Shape {
    ComplexityClass::Kind kind;
    bool has_scale;
    double scale_lo, scale_hi;
    std::function<double(double)> base;
  };
  const std::vector<Shape> shapes = {
      {ComplexityClass::Kind::Exponential, true, 1e-12, 1e12,
       [](double l) { return l; }},
      {ComplexityClass::Kind::Factorial, false, 1.0, 1.0,
       [](double l) { return log_factorial(static_cast<int>(l)); }},
      {ComplexityClass::Kind::ScaledFactorial, true, 1e-6, 1.0 - 1e-9,
       [](double l) { return log_factorial(static_cast<int>(l)); }},
      {ComplexityClass::Kind::IteratedLog, false, 1.0, 1.0,
       [](double l) { return l * std::log(std::log(l)); }},
  };

  ClassEstimate est;
  est.best = ComplexityClass::Kind::Factorial;
  est.best_scale = 1.0;
  est.low_confidence = starved || ls.size() < 3;
  double best_rms = std::numeric_limits<double>::infinity();

  for (const Shape& shape : shapes) {
    CandidateFit fit{shape.kind, 1.0, 0.0,
                     std::numeric_limits<double>::infinity(), false};
    std::vector<double> us, vs;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (shape.kind == ComplexityClass::Kind::IteratedLog && ls[i] < 3.0) {
        continue;  // ln ln L undefined below e
      }
      us.push_back(shape.base(ls[i]));
      vs.push_back(ys[i]);
    }
    if (us.size() >= 2) {
      const double n = static_cast<double>(us.size());
      double su = 0, sv = 0, suu = 0, suv = 0;
      for (std::size_t i = 0; i < us.size(); ++i) {
        su += us[i];
        sv += vs[i];
        suu += us[i] * us[i];
        suv += us[i] * vs[i];
      }
      double scale = 1.0, intercept = 0.0;
      if (shape.has_scale) {
        const double det = n * suu - su * su;
        if (std::abs(det) > 1e-12) {
          scale = (n * suv - su * sv) / det;
          intercept = (sv - scale * su) / n;
        }
      } else {
        intercept = (sv - su) / n;
      }
      if (!shape.has_scale || (scale >= shape.scale_lo &&
                               scale <= shape.scale_hi)) {
        double sq = 0.0;
        for (std::size_t i = 0; i < us.size(); ++i) {
          const double e = vs[i] - (scale * us[i] + intercept);
          sq += e * e;
        }
        fit.valid = true;
        fit.scale = scale;
        fit.intercept = intercept;
        fit.rms_residual = std::sqrt(sq / n);
      }
    }
    if (fit.valid && fit.rms_residual < best_rms) {
      best_rms = fit.rms_residual;
      est.best = fit.kind;
      est.best_scale = fit.scale;
    }
    est.fits.push_back(fit);
  }
  if (!std::isfinite(best_rms)) est.low_confidence = true;
  return est;
}

}  // namespace groupent
