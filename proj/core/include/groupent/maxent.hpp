#ifndef GROUPENT_MAXENT_HPP
#define GROUPENT_MAXENT_HPP

#include <cstddef>
#include <vector>

#include "groupent/distribution.hpp"
#include "groupent/entropy.hpp"

namespace groupent {

/// Linear energy-mean constraint: sum E_i p_i = mean_target over the given
/// levels, together with normalization. The target must lie strictly
/// between the extreme levels unless all levels coincide; violations raise
/// InfeasibleConstraintError.
struct EnergyConstraint {
  std::vector<double> levels;
  double mean_target;

  EnergyConstraint(std::vector<double> levels, double mean_target);
};

struct MaxEntResult {
  Distribution p_star;
  double lambda1;            // multiplier of the normalization constraint
  double lambda2;            // multiplier of the energy constraint
  double stationarity_norm;  // max-norm of the projected entropy gradient
  double objective;          // S[p_star]
  bool converged;
  bool boundary;  // some p*_i pinned at (numerical) zero
  std::size_t iterations;
};

struct MaxEntOptions {
  std::size_t max_iterations = 100000;
  double tolerance = 1e-8;
};

/// q-deformed exponential [1 + (1-q)x]^(1/(1-q)) with the standard cutoff to
/// 0 when the base is nonpositive; q = 1 gives e^x.
double qexp(double x, double q);

/// Maximize the entropy family over the simplex subject to normalization and
/// the energy-mean constraint. Projected ascent along the two-constraint
/// tangent space with analytic gradients and diagonal curvature scaling; a
/// derivative-free coordinate-exchange fallback guards stalls. Failure to
/// reach the stationarity tolerance is reported through the flags, not
/// thrown.
MaxEntResult maximize(const EntropySpec& spec,
                      const EnergyConstraint& constraint,
                      const MaxEntOptions& options = {});

struct QExpFit {
  bool applicable;  // false for boundary or degenerate (all-equal) solutions
  double q;
  double beta;
  double c;        // p(E) = c * qexp(-beta*E, q)
  double residual; // max relative deviation of the fit
};

/// Least-squares fit of (E_i, p*_i) to the q-exponential family. Duplicate
/// energy levels are merged for the regression and the residual is taken
/// over the original points.
QExpFit verify_qexponential_form(const MaxEntResult& result,
                                 const EnergyConstraint& constraint);

}  // namespace groupent

#endif
