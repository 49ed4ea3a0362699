#ifndef GROUPENT_ENTROPY_HPP
#define GROUPENT_ENTROPY_HPP

#include <string>

#include "groupent/distribution.hpp"
#include "groupent/group_law.hpp"

namespace groupent {

enum class EntropyKind {
  BGS,
  Tsallis,
  Renyi,
  NonTraceI,    // algebraic class,        lambda*(e^(R_alpha/a) - 1)
  NonTraceII,   // exponential class,      (lambda/ln k)*R_alpha
  NonTraceIII,  // super-exponential,      lambda*(e^(W0(R_alpha/g)) - 1)
  TraceI,       // sum p*((1/p)^(1/a) - 1)
  TraceII,      // (lambda/ln k)*sum p*ln(1/p)
  TraceIII,     // sum p*(e^(W0(-ln p/g)) - 1)
  ZEntropy,     // NonTraceIII with lambda fixed to 1
};

const char* to_string(EntropyKind kind);
EntropyKind entropy_kind_from_string(const std::string& name);

/// A selected entropy functional with its parameters. Build through the
/// factories, which reject out-of-range parameters; fields not used by the
/// kind are left at their defaults and ignored.
struct EntropySpec {
  EntropyKind kind = EntropyKind::BGS;
  double lambda = 1.0;
  double alpha = 2.0;    // alpha-bearing kinds, > 0 and != 1
  double q = 2.0;        // Tsallis
  double a = 1.0;        // class I, > 0
  double k = 2.0;        // class II, > 1 (states per component)
  double gamma = 1.0;    // class III, > 0
  double k_scale = 1.0;  // Tsallis front constant, > 0

  static EntropySpec bgs();
  static EntropySpec tsallis(double q, double k_scale = 1.0);
  static EntropySpec renyi(double alpha);
  static EntropySpec non_trace_i(double a, double alpha, double lambda = 1.0);
  static EntropySpec non_trace_ii(double k, double alpha, double lambda = 1.0);
  static EntropySpec non_trace_iii(double gamma, double alpha,
                                   double lambda = 1.0);
  static EntropySpec trace_i(double a, double lambda = 1.0);
  static EntropySpec trace_ii(double k, double lambda = 1.0);
  static EntropySpec trace_iii(double gamma, double lambda = 1.0);
  static EntropySpec z_entropy(double gamma, double alpha);

  void validate() const;  // throws std::invalid_argument on violations
};

/// Shannon form sum p_i ln(1/p_i), zero entries skipped.
double bgs(const Distribution& p);

/// k_scale * (1 - sum p_i^q) / (q - 1); q = 1 is rejected (use bgs, or the
/// CLI --limit switch).
double tsallis(const Distribution& p, double q, double k_scale = 1.0);

/// ln(sum p_i^alpha) / (1 - alpha); alpha = 1 is rejected (use bgs).
double renyi(const Distribution& p, double alpha);

/// Evaluate any family on a distribution.
double evaluate(const EntropySpec& spec, const Distribution& p);

/// Closed-form value on the uniform distribution with ln W = log_w, without
/// materializing the W-point vector. Defined for every family.
double evaluate_on_uniform_logw(const EntropySpec& spec, double log_w);

/// The composition law matched to a non-trace family (kinds NonTraceI/II/III
/// and ZEntropy); other kinds are rejected.
GroupLaw derive_law_for(const EntropySpec& spec);

}  // namespace groupent

#endif
