#include "groupent/state_space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "groupent/lambert.hpp"

namespace groupent {

StateSpaceModel StateSpaceModel::algebraic(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("StateSpaceModel: a must be > 0");
  return {Kind::Algebraic, a};
}

StateSpaceModel StateSpaceModel::exponential(double k) {
  if (!(k > 1.0)) throw std::invalid_argument("StateSpaceModel: k must be > 1");
  return {Kind::Exponential, k};
}

StateSpaceModel StateSpaceModel::super_exponential(double g) {
  if (!(g > 0.0)) {
    throw std::invalid_argument("StateSpaceModel: gamma must be > 0");
  }
  return {Kind::SuperExponential, g};
}

double log_states(const StateSpaceModel& model, double n) {
  if (!(n >= 1.0)) {
    throw std::invalid_argument("log_states: N must be >= 1, got " +
                                std::to_string(n));
  }
  switch (model.kind) {
    case StateSpaceModel::Kind::Algebraic:
      return model.param * std::log(n);
    case StateSpaceModel::Kind::Exponential:
      return n * std::log(model.param);
    case StateSpaceModel::Kind::SuperExponential:
      return model.param * n * std::log(n);
  }
  throw std::invalid_argument("log_states: unsupported model kind");
}

double inverse_states(const StateSpaceModel& model, double log_w) {
  if (!(log_w >= 0.0)) {
    throw std::domain_error("inverse_states: logW must be >= 0, got " +
                            std::to_string(log_w));
  }
  switch (model.kind) {
    case StateSpaceModel::Kind::Algebraic:
      return std::exp(log_w / model.param);
    case StateSpaceModel::Kind::Exponential:
      return log_w / std::log(model.param);
    case StateSpaceModel::Kind::SuperExponential:
      // N ln N = logW / gamma, solved by the Lambert round trip.
      return std::exp(lambert_w0(log_w / model.param));
  }
  throw std::invalid_argument("inverse_states: unsupported model kind");
}

}  // namespace groupent
