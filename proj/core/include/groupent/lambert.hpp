#ifndef GROUPENT_LAMBERT_HPP
#define GROUPENT_LAMBERT_HPP

namespace groupent {

struct LambertResult {
  double w;
  double residual;  // |w*e^w - x|, absolute
};

/// Principal branch of the Lambert W function: the w >= -1 solving
/// w * e^w = x for x >= -1/e.
///
/// Halley iteration from ln(1+x) (asymptotic ln x - ln ln x above 1e15),
/// capped at 50 steps. Residual stays below 1e-12 * max(1, |x|); throws
/// std::domain_error below the branch point.
double lambert_w0(double x);

LambertResult lambert_w0_result(double x);

}  // namespace groupent

#endif
