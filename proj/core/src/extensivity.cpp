#include "groupent/extensivity.hpp"

#include <cmath>
#include <stdexcept>

namespace groupent {

std::vector<ScanRow> extensivity_scan(const EntropySpec& spec,
                                      const StateSpaceModel& model,
                                      const std::vector<double>& n_list) {
  if (n_list.empty()) {
    throw std::invalid_argument("extensivity_scan: N list must be nonempty");
  }
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (!(n_list[i] > n_list[i - 1])) {
      throw std::invalid_argument("extensivity_scan: N list must be ascending");
    }
  }
  std::vector<ScanRow> rows;
  rows.reserve(n_list.size());
  for (double n : n_list) {
    const double s = evaluate_on_uniform_logw(spec, log_states(model, n));
    rows.push_back(ScanRow{n, s, s / n});
  }
  return rows;
}

ScanSummary summarize_scan(const std::vector<ScanRow>& rows,
                           double threshold) {
  if (rows.empty()) {
    throw std::invalid_argument("summarize_scan: empty scan");
  }
  const double n_max = rows.back().n;
  const double final_ratio = rows.back().per_component;
  const double scale = std::max(std::abs(final_ratio), 1e-300);
  bool converged = true;
  for (const ScanRow& r : rows) {
    if (r.n < n_max / 10.0) continue;
    if (std::abs(r.per_component - final_ratio) / scale >= threshold) {
      converged = false;
      break;
    }
  }
  return ScanSummary{converged, final_ratio};
}

}  // namespace groupent
