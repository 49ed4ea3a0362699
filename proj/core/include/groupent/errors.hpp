#ifndef GROUPENT_ERRORS_HPP
#define GROUPENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace groupent {

// Thrown when an energy-mean constraint cannot be met by any distribution
// over the given levels.
class InfeasibleConstraintError : public std::runtime_error {
 public:
  explicit InfeasibleConstraintError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a deterministic map orbit hits an absorbing point in floating
// point (e.g. the logistic orbit reaching exactly 0 or 1).
class DegenerateOrbitError : public std::runtime_error {
 public:
  explicit DegenerateOrbitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace groupent

#endif
