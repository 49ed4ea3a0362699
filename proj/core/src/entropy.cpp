#include "groupent/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "groupent/lambert.hpp"
#include "groupent/numeric.hpp"

namespace groupent {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool has_alpha(EntropyKind k) {
  switch (k) {
    case EntropyKind::Renyi:
    case EntropyKind::NonTraceI:
    case EntropyKind::NonTraceII:
    case EntropyKind::NonTraceIII:
    case EntropyKind::ZEntropy:
      return true;
    default:
      return false;
  }
}

}  // namespace

const char* to_string(EntropyKind kind) {
  switch (kind) {
    case EntropyKind::BGS: return "BGS";
    case EntropyKind::Tsallis: return "Tsallis";
    case EntropyKind::Renyi: return "Renyi";
    case EntropyKind::NonTraceI: return "NonTraceI";
    case EntropyKind::NonTraceII: return "NonTraceII";
    case EntropyKind::NonTraceIII: return "NonTraceIII";
    case EntropyKind::TraceI: return "TraceI";
    case EntropyKind::TraceII: return "TraceII";
    case EntropyKind::TraceIII: return "TraceIII";
    case EntropyKind::ZEntropy: return "ZEntropy";
  }
  throw std::invalid_argument("to_string: unknown entropy kind");
}

EntropyKind entropy_kind_from_string(const std::string& name) {
  for (EntropyKind k :
       {EntropyKind::BGS, EntropyKind::Tsallis, EntropyKind::Renyi,
        EntropyKind::NonTraceI, EntropyKind::NonTraceII,
        EntropyKind::NonTraceIII, EntropyKind::TraceI, EntropyKind::TraceII,
        EntropyKind::TraceIII, EntropyKind::ZEntropy}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown entropy kind: " + name);
}

void EntropySpec::validate() const {
  require(lambda > 0.0, "EntropySpec: lambda must be > 0");
  if (has_alpha(kind)) {
    require(alpha > 0.0 && alpha != 1.0,
            "EntropySpec: alpha must be > 0 and != 1");
  }
  switch (kind) {
    case EntropyKind::Tsallis:
      require(q != 1.0, "EntropySpec: Tsallis q = 1; the q -> 1 limit is BGS");
      require(k_scale > 0.0, "EntropySpec: k_scale must be > 0");
      break;
    case EntropyKind::NonTraceI:
    case EntropyKind::TraceI:
      require(a > 0.0, "EntropySpec: a must be > 0");
      break;
    case EntropyKind::NonTraceII:
    case EntropyKind::TraceII:
      require(k > 1.0, "EntropySpec: k must be > 1");
      break;
    case EntropyKind::NonTraceIII:
    case EntropyKind::TraceIII:
    case EntropyKind::ZEntropy:
      require(gamma > 0.0, "EntropySpec: gamma must be > 0");
      break;
    default:
      break;
  }
}

EntropySpec EntropySpec::bgs() { return EntropySpec{}; }

EntropySpec EntropySpec::tsallis(double q, double k_scale) {
  EntropySpec s;
  s.kind = EntropyKind::Tsallis;
  s.q = q;
  s.k_scale = k_scale;
  s.validate();
  return s;
}

EntropySpec EntropySpec::renyi(double alpha) {
  EntropySpec s;
  s.kind = EntropyKind::Renyi;
  s.alpha = alpha;
  s.validate();
  return s;
}

EntropySpec EntropySpec::non_trace_i(double a, double alpha, double lambda) {
  EntropySpec s;
  s.kind = EntropyKind::NonTraceI;
  s.a = a;
  s.alpha = alpha;
  s.lambda = lambda;
  s.validate();
  return s;
}

EntropySpec EntropySpec::non_trace_ii(double k, double alpha, double lambda) {
  EntropySpec s;
  s.kind = EntropyKind::NonTraceII;
  s.k = k;
  s.alpha = alpha;
  s.lambda = lambda;
  s.validate();
  return s;
}

EntropySpec EntropySpec::non_trace_iii(double gamma, double alpha,
                                       double lambda) {
  EntropySpec s;
  s.kind = EntropyKind::NonTraceIII;
  s.gamma = gamma;
  s.alpha = alpha;
  s.lambda = lambda;
  s.validate();
  return s;
}

EntropySpec EntropySpec::trace_i(double a, double lambda) {
  EntropySpec s;
  s.kind = EntropyKind::TraceI;
  s.a = a;
  s.lambda = lambda;
  s.validate();
  return s;
}

EntropySpec EntropySpec::trace_ii(double k, double lambda) {
  EntropySpec s;
  s.kind = EntropyKind::TraceII;
  s.k = k;
  s.lambda = lambda;
  s.validate();
  return s;
}

EntropySpec EntropySpec::trace_iii(double gamma, double lambda) {
  EntropySpec s;
  s.kind = EntropyKind::TraceIII;
  s.gamma = gamma;
  s.lambda = lambda;
  s.validate();
  return s;
}

EntropySpec EntropySpec::z_entropy(double gamma, double alpha) {
  EntropySpec s;
  s.kind = EntropyKind::ZEntropy;
  s.gamma = gamma;
  s.alpha = alpha;
  s.lambda = 1.0;
  s.validate();
  return s;
}

double bgs(const Distribution& p) {
  NeumaierSum s;
  for (double pi : p.probs()) {
    if (pi > 0.0) s.add(-pi * std::log(pi));
  }
  return s.value();
}

double tsallis(const Distribution& p, double q, double k_scale) {
  if (q == 1.0) {
    throw std::invalid_argument("tsallis: q = 1; the q -> 1 limit is bgs()");
  }
  if (!(q > 0.0)) {
    // Direct sum; the log-space route requires a positive exponent.
    NeumaierSum s;
    for (double pi : p.probs()) {
      if (pi > 0.0) s.add(std::pow(pi, q));
    }
    return k_scale * (1.0 - s.value()) / (q - 1.0);
  }
  const double x = alpha_log_sum(p, q).value;
  return k_scale * std::expm1(x) / (1.0 - q);
}

double renyi(const Distribution& p, double alpha) {
  if (alpha == 1.0) {
    throw std::invalid_argument("renyi: alpha = 1; the limit is bgs()");
  }
  return alpha_log_sum(p, alpha).value / (1.0 - alpha);
}

double evaluate(const EntropySpec& spec, const Distribution& p) {
  spec.validate();
  switch (spec.kind) {
    case EntropyKind::BGS:
      return bgs(p);
    case EntropyKind::Tsallis:
      return tsallis(p, spec.q, spec.k_scale);
    case EntropyKind::Renyi:
      return renyi(p, spec.alpha);
    case EntropyKind::NonTraceI:
      return spec.lambda * std::expm1(renyi(p, spec.alpha) / spec.a);
    case EntropyKind::NonTraceII:
      return spec.lambda / std::log(spec.k) * renyi(p, spec.alpha);
    case EntropyKind::NonTraceIII:
      return spec.lambda *
             std::expm1(lambert_w0(renyi(p, spec.alpha) / spec.gamma));
    case EntropyKind::TraceI: {
      NeumaierSum s;
      for (double pi : p.probs()) {
        if (pi > 0.0) s.add(pi * std::expm1(-std::log(pi) / spec.a));
      }
      return spec.lambda * s.value();
    }
    case EntropyKind::TraceII:
      return spec.lambda / std::log(spec.k) * bgs(p);
    case EntropyKind::TraceIII: {
      NeumaierSum s;
      for (double pi : p.probs()) {
        if (pi > 0.0) {
          s.add(pi * std::expm1(lambert_w0(-std::log(pi) / spec.gamma)));
        }
      }
      return spec.lambda * s.value();
    }
    case EntropyKind::ZEntropy:
      return std::expm1(lambert_w0(renyi(p, spec.alpha) / spec.gamma));
  }
  throw std::invalid_argument("evaluate: unknown entropy kind");
}

double evaluate_on_uniform_logw(const EntropySpec& spec, double log_w) {
  spec.validate();
  if (!(log_w >= 0.0) || !std::isfinite(log_w)) {
    throw std::invalid_argument(
        "evaluate_on_uniform_logw: logW must be finite and >= 0");
  }
  // On the uniform W-point distribution every family reduces to a function
  // of ln W alone (the Renyi entropy of the uniform ensemble is ln W for
  // every alpha).
  switch (spec.kind) {
    case EntropyKind::BGS:
      return log_w;
    case EntropyKind::Tsallis:
      return spec.k_scale * std::expm1((1.0 - spec.q) * log_w) /
             (1.0 - spec.q);
    case EntropyKind::Renyi:
      return log_w;
    case EntropyKind::NonTraceI:
    case EntropyKind::TraceI:
      return spec.lambda * std::expm1(log_w / spec.a);
    case EntropyKind::NonTraceII:
    case EntropyKind::TraceII:
      return spec.lambda / std::log(spec.k) * log_w;
    case EntropyKind::NonTraceIII:
    case EntropyKind::TraceIII:
      return spec.lambda * std::expm1(lambert_w0(log_w / spec.gamma));
    case EntropyKind::ZEntropy:
      return std::expm1(lambert_w0(log_w / spec.gamma));
  }
  throw std::invalid_argument("evaluate_on_uniform_logw: unknown kind");
}

GroupLaw derive_law_for(const EntropySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case EntropyKind::NonTraceI:
      return derive_generator(StateSpaceModel::algebraic(spec.a), spec.lambda,
                              spec.alpha);
    case EntropyKind::NonTraceII:
      return derive_generator(StateSpaceModel::exponential(spec.k),
                              spec.lambda, spec.alpha);
    case EntropyKind::NonTraceIII:
    case EntropyKind::ZEntropy:
      return derive_generator(StateSpaceModel::super_exponential(spec.gamma),
                              spec.lambda, spec.alpha);
    default:
      throw std::invalid_argument(
          "derive_law_for: only non-trace families compose through a law");
  }
}

}  // namespace groupent
