#include "groupent/delta.hpp"

#include <stdexcept>
#include <vector>

#include "groupent/numeric.hpp"

namespace groupent {

JointSystem::JointSystem(Distribution j, std::size_t wa, std::size_t wb)
    : joint(std::move(j)), w_a(wa), w_b(wb) {
  if (w_a == 0 || w_b == 0 || joint.size() != w_a * w_b) {
    throw std::invalid_argument(
        "JointSystem: joint size must equal W_A * W_B with both positive");
  }
}

std::pair<Distribution, Distribution> marginals(const JointSystem& sys) {
  std::vector<NeumaierSum> row(sys.w_a), col(sys.w_b);
  for (std::size_t i = 0; i < sys.w_a; ++i) {
    for (std::size_t j = 0; j < sys.w_b; ++j) {
      const double v = sys.joint[i * sys.w_b + j];
      row[i].add(v);
      col[j].add(v);
    }
  }
  std::vector<double> pa(sys.w_a), pb(sys.w_b);
  for (std::size_t i = 0; i < sys.w_a; ++i) pa[i] = row[i].value();
  for (std::size_t j = 0; j < sys.w_b; ++j) pb[j] = col[j].value();
  return {Distribution(std::move(pa)), Distribution(std::move(pb))};
}

DeltaBreakdown delta(const EntropySpec& spec, const JointSystem& sys) {
  const GroupLaw law = derive_law_for(spec);  // rejects trace/classic kinds
  const auto [pa, pb] = marginals(sys);
  const double s_a = evaluate(spec, pa);
  const double s_b = evaluate(spec, pb);
  const double s_ab = evaluate(spec, sys.joint);
  const double s_prod = law.compose(s_a, s_b);
  return DeltaBreakdown{s_prod - s_ab, s_a, s_b, s_ab, s_prod};
}

}  // namespace groupent
