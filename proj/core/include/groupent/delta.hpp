#ifndef GROUPENT_DELTA_HPP
#define GROUPENT_DELTA_HPP

#include <cstddef>
#include <utility>

#include "groupent/distribution.hpp"
#include "groupent/entropy.hpp"

namespace groupent {

/// Joint distribution over the product event space of two subsystems,
/// stored row-major over (a, b): entry index i*W_B + j.
struct JointSystem {
  Distribution joint;
  std::size_t w_a;
  std::size_t w_b;

  JointSystem(Distribution joint, std::size_t w_a, std::size_t w_b);
};

/// Row and column sums of the joint: the marginal distributions of the two
/// subsystems.
std::pair<Distribution, Distribution> marginals(const JointSystem& sys);

struct DeltaBreakdown {
  double delta;       // phi(S(A), S(B)) - S(AB)
  double s_a;
  double s_b;
  double s_ab;        // entropy of the full joint
  double s_product;   // phi(S(A), S(B)) = entropy of the independent join
};

/// Interdependence measure for a non-trace group entropy: the gap between
/// the entropy the marginals would compose to under the family's law and
/// the entropy of the actual joint. Zero whenever the joint factorizes.
DeltaBreakdown delta(const EntropySpec& spec, const JointSystem& sys);

}  // namespace groupent

#endif
