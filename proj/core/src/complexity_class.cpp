#include "groupent/complexity_class.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "groupent/lambert.hpp"

namespace groupent {

namespace {

double iterated_log(double t, int k) {
  double v = t;
  for (int i = 0; i < k; ++i) v = std::log(v);
  return v;
}

}  // namespace

ComplexityClass ComplexityClass::exponential(double c) {
  if (!(c > 0.0)) {
    throw std::invalid_argument("ComplexityClass: exponential needs c > 0");
  }
  return {Kind::Exponential, c, 2};
}

ComplexityClass ComplexityClass::factorial() {
  return {Kind::Factorial, 1.0, 2};
}

ComplexityClass ComplexityClass::scaled_factorial(double c) {
  if (!(c > 0.0 && c < 1.0)) {
    throw std::invalid_argument(
        "ComplexityClass: scaled factorial needs c in (0, 1)");
  }
  return {Kind::ScaledFactorial, c, 2};
}

ComplexityClass ComplexityClass::iterated_log(int k) {
  if (k < 2) {
    throw std::invalid_argument("ComplexityClass: iterated log needs k >= 2");
  }
  return {Kind::IteratedLog, 1.0, k};
}

const char* to_string(ComplexityClass::Kind kind) {
  switch (kind) {
    case ComplexityClass::Kind::Exponential: return "ExponentialClass";
    case ComplexityClass::Kind::Factorial: return "FactorialClass";
    case ComplexityClass::Kind::ScaledFactorial: return "ScaledFactorial";
    case ComplexityClass::Kind::IteratedLog: return "IteratedLog";
  }
  throw std::invalid_argument("to_string: unknown complexity class");
}

double class_t0(const ComplexityClass& cls) {
  switch (cls.kind) {
    case ComplexityClass::Kind::Exponential:
      return 0.0;
    case ComplexityClass::Kind::Factorial:
    case ComplexityClass::Kind::ScaledFactorial:
      return 1.0;
    case ComplexityClass::Kind::IteratedLog: {
      // ln^(k) t = 0 at t = exp^(k-1)(1).
      double t = 1.0;
      for (int i = 0; i < cls.k - 1; ++i) t = std::exp(t);
      return t;
    }
  }
  throw std::invalid_argument("class_t0: unknown complexity class");
}

double class_g(const ComplexityClass& cls, double t) {
  if (!(t >= class_t0(cls))) {
    throw std::domain_error("class_g: t = " + std::to_string(t) +
                            " below the class domain");
  }
  switch (cls.kind) {
    case ComplexityClass::Kind::Exponential:
      return cls.c * t;
    case ComplexityClass::Kind::Factorial:
      return t * std::log(t);
    case ComplexityClass::Kind::ScaledFactorial:
      return cls.c * t * std::log(t);
    case ComplexityClass::Kind::IteratedLog:
      return t * iterated_log(t, cls.k);
  }
  throw std::invalid_argument("class_g: unknown complexity class");
}

double class_g_inverse(const ComplexityClass& cls, double y) {
  if (!(y >= 0.0)) {
    throw std::domain_error("class_g_inverse: y must be >= 0");
  }
  switch (cls.kind) {
    case ComplexityClass::Kind::Exponential:
      return y / cls.c;
    case ComplexityClass::Kind::Factorial:
      return std::exp(lambert_w0(y));
    case ComplexityClass::Kind::ScaledFactorial:
      return std::exp(lambert_w0(y / cls.c));
    case ComplexityClass::Kind::IteratedLog:
      return class_g_inverse_generic(cls, y);
  }
  throw std::invalid_argument("class_g_inverse: unknown complexity class");
}

double class_g_inverse_generic(const ComplexityClass& cls, double y) {
  if (!(y >= 0.0)) {
    throw std::domain_error("class_g_inverse_generic: y must be >= 0");
  }
  double lo = class_t0(cls);
  double hi = std::max(2.0 * lo, lo + 1.0);
  while (class_g(cls, hi) < y) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (class_g(cls, mid) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-13 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace groupent
