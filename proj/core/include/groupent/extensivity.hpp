#ifndef GROUPENT_EXTENSIVITY_HPP
#define GROUPENT_EXTENSIVITY_HPP

#include <vector>

#include "groupent/entropy.hpp"
#include "groupent/state_space.hpp"

namespace groupent {

struct ScanRow {
  double n;
  double entropy;     // S on the uniform ensemble of W(N) states
  double per_component;  // S / N
};

struct ScanSummary {
  bool converged;         // relative spread of S/N over the last decade of N
  double limit_estimate;  // S/N at the largest N
};

/// Entropy per component over the uniform ensemble, S(1/W(N))/N, for each N
/// in an ascending, nonempty list. Evaluated in log space so W(N) itself is
/// never formed.
std::vector<ScanRow> extensivity_scan(const EntropySpec& spec,
                                      const StateSpaceModel& model,
                                      const std::vector<double>& n_list);

/// Declares convergence when every S/N over the last decade of N (N >=
/// N_max/10) deviates from the final value by less than `threshold` in
/// relative terms.
ScanSummary summarize_scan(const std::vector<ScanRow>& rows,
                           double threshold = 1e-2);

}  // namespace groupent

#endif
