#ifndef GROUPENT_COMPLEXITY_CLASS_HPP
#define GROUPENT_COMPLEXITY_CLASS_HPP

namespace groupent {

/// Growth law g(L) for the log-count of allowed L-patterns of a process,
/// with a numerically invertible g. Strictly increasing for t >= t0.
struct ComplexityClass {
  enum class Kind { Exponential, Factorial, ScaledFactorial, IteratedLog };

  Kind kind = Kind::Factorial;
  double c = 1.0;  // Exponential (c > 0) and ScaledFactorial (0 < c < 1)
  int k = 2;       // IteratedLog depth, >= 2

  static ComplexityClass exponential(double c);       // g(t) = c*t
  static ComplexityClass factorial();                 // g(t) = t*ln t
  static ComplexityClass scaled_factorial(double c);  // g(t) = c*t*ln t
  static ComplexityClass iterated_log(int k);         // g(t) = t*ln^(k) t
};

const char* to_string(ComplexityClass::Kind kind);

/// Left end of the monotone domain (g(t0) = 0).
double class_t0(const ComplexityClass& cls);

/// g(t) for t >= t0; throws std::domain_error outside.
double class_g(const ComplexityClass& cls, double t);

/// g^-1(y) for y >= 0: closed forms for the exponential and factorial kinds
/// (Lambert), monotone bisection for the iterated-log kind.
double class_g_inverse(const ComplexityClass& cls, double y);

/// Bisection-only inverse, kept separate as an independent route for
/// checking the closed forms.
double class_g_inverse_generic(const ComplexityClass& cls, double y);

}  // namespace groupent

#endif
