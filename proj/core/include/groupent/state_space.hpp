#ifndef GROUPENT_STATE_SPACE_HPP
#define GROUPENT_STATE_SPACE_HPP

namespace groupent {

/// Asymptotic growth rule for the number of states W(N) of an N-component
/// system. Only ln W is ever evaluated, so super-exponential sizes never
/// have to be materialized.
struct StateSpaceModel {
  enum class Kind { Algebraic, Exponential, SuperExponential };

  Kind kind;
  double param;  // a (Algebraic), k (Exponential), gamma (SuperExponential)

  static StateSpaceModel algebraic(double a);          // W(N) = N^a, a > 0
  static StateSpaceModel exponential(double k);        // W(N) = k^N, k > 1
  static StateSpaceModel super_exponential(double g);  // W(N) = N^(g N), g > 0
};

/// ln W(N) for real N >= 1.
double log_states(const StateSpaceModel& model, double n);

/// The real N with log_states(model, N) = logW; requires logW >= 0.
double inverse_states(const StateSpaceModel& model, double log_w);

}  // namespace groupent

#endif
