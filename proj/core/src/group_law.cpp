#include "groupent/group_law.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "groupent/lambert.hpp"

namespace groupent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void domain_fail(const char* fn, double v) {
  throw std::domain_error(std::string(fn) + ": argument " + std::to_string(v) +
                          " outside the law's valid range");
}

double unified_g_raw(double aa, double bb, double t) {
  // e^(aa t) - e^(bb t) = e^(bb t) * expm1((aa - bb) t); the expm1 form keeps
  // the difference accurate when aa - bb is tiny.
  return std::exp(bb * t) * std::expm1((aa - bb) * t) / (aa - bb);
}

double unified_g_prime(double aa, double bb, double t) {
  return (aa * std::exp(aa * t) - bb * std::exp(bb * t)) / (aa - bb);
}

}  // namespace

double GroupLaw::g(double t) const {
  if (!(t >= t_lo_)) domain_fail("GroupLaw::g", t);
  switch (kind_) {
    case Kind::Algebraic:
      return lambda_ * std::expm1(t / param_);
    case Kind::Exponential:
      return lambda_ * t / param_;  // param_ holds ln k
    case Kind::SuperExponential:
      return lambda_ * std::expm1(lambert_w0(t / param_));
    case Kind::Unified:
      return unified_g_raw(aa_, bb_, t);
  }
  domain_fail("GroupLaw::g", t);
}

double GroupLaw::g_inv(double y) const {
  if (image_closed_ ? !(y >= image_lo_) : !(y > image_lo_)) {
    domain_fail("GroupLaw::g_inv", y);
  }
  switch (kind_) {
    case Kind::Algebraic:
      return param_ * std::log1p(y / lambda_);
    case Kind::Exponential:
      return y * param_ / lambda_;
    case Kind::SuperExponential: {
      const double u = std::log1p(y / lambda_);
      return param_ * u * std::exp(u);
    }
    case Kind::Unified: {
      // Safeguarded Newton with bisection fallback on the monotone branch.
      double lo = t_lo_;
      double hi = (t_lo_ > -kInf) ? t_lo_ + 1.0 : 1.0;
      if (lo == -kInf) {
        lo = -1.0;
        while (unified_g_raw(aa_, bb_, lo) > y) lo *= 2.0;
      }
      while (unified_g_raw(aa_, bb_, hi) < y) {
        hi = (hi > 0.0) ? hi * 2.0 : hi + 1.0;
      }
      double t = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        const double f = unified_g_raw(aa_, bb_, t) - y;
        if (f > 0.0) {
          hi = t;
        } else {
          lo = t;
        }
        const double dg = unified_g_prime(aa_, bb_, t);
        double next = (dg > 0.0) ? t - f / dg : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) <= 1e-15 * (1.0 + std::abs(next))) {
          t = next;
          break;
        }
        t = next;
      }
      return t;
    }
  }
  domain_fail("GroupLaw::g_inv", y);
}

double GroupLaw::compose(double x, double y) const {
  const double t = g_inv(x) + g_inv(y);
  if (!(t >= t_lo_)) domain_fail("GroupLaw::compose", t);
  return g(t);
}

double GroupLaw::formal_inverse(double x) const {
  const double t = -g_inv(x);
  if (!(t >= t_lo_)) domain_fail("GroupLaw::formal_inverse", x);
  return g(t);
}

GroupLaw derive_generator(const StateSpaceModel& model, double lambda,
                          double alpha) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("derive_generator: lambda must be > 0");
  }
  if (!(alpha > 0.0) || alpha == 1.0) {
    throw std::invalid_argument(
        "derive_generator: alpha must be > 0 and != 1");
  }
  GroupLaw law;
  law.lambda_ = lambda;
  law.alpha_ = alpha;
  switch (model.kind) {
    case StateSpaceModel::Kind::Algebraic:
      law.kind_ = GroupLaw::Kind::Algebraic;
      law.param_ = model.param;
      law.t_lo_ = -kInf;
      law.image_lo_ = -lambda;
      break;
    case StateSpaceModel::Kind::Exponential:
      law.kind_ = GroupLaw::Kind::Exponential;
      law.param_ = std::log(model.param);
      law.t_lo_ = -kInf;
      law.image_lo_ = -kInf;
      break;
    case StateSpaceModel::Kind::SuperExponential:
      law.kind_ = GroupLaw::Kind::SuperExponential;
      law.param_ = model.param;
      law.t_lo_ = -model.param * std::exp(-1.0);
      law.image_lo_ = lambda * std::expm1(-1.0);
      law.image_closed_ = true;
      break;
  }
  return law;
}

GroupLaw unified_generator(double aa, double bb) {
  if (aa == bb) {
    throw std::invalid_argument(
        "unified_generator: aa == bb; use the analytic limit form");
  }
  if (aa < bb) std::swap(aa, bb);  // G is symmetric in (aa, bb)
  GroupLaw law;
  law.kind_ = GroupLaw::Kind::Unified;
  law.aa_ = aa;
  law.bb_ = bb;
  law.lambda_ = 1.0;
  law.param_ = 0.0;
  if (aa * bb > 0.0) {
    // G' vanishes at t* = -ln(aa/bb)/(aa-bb); monotone branch is [t*, inf).
    law.t_lo_ = -std::log(aa / bb) / (aa - bb);
    law.image_lo_ = unified_g_raw(aa, bb, law.t_lo_);
    law.image_closed_ = true;
  } else {
    law.t_lo_ = -kInf;
    // aa > bb with aa*bb <= 0: G decreases without bound unless bb = 0,
    // where e^(aa t)-1 bottoms out at -1.
    law.image_lo_ = (bb == 0.0) ? -1.0 / aa : -kInf;
  }
  return law;
}

double generator_entropy(const GroupLaw& law, const Distribution& p,
                         double alpha) {
  if (!(alpha > 0.0) || alpha == 1.0) {
    throw std::invalid_argument(
        "generator_entropy: alpha must be > 0 and != 1");
  }
  const double x = alpha_log_sum(p, alpha).value;
  return law.g(x) / (1.0 - alpha);
}

}  // namespace groupent
