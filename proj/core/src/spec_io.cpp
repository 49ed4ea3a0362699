#include "groupent/spec_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace groupent {

namespace {

using nlohmann::ordered_json;

double number_field(const ordered_json& j, const char* key, double fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) {
    throw std::invalid_argument(std::string("EntropySpec field '") + key +
                                "' must be numeric");
  }
  return v.get<double>();
}

}  // namespace

EntropySpec spec_from_json_text(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("EntropySpec JSON parse error: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw std::invalid_argument(
        "EntropySpec JSON must be an object with a string 'kind'");
  }
  EntropySpec spec;
  spec.kind = entropy_kind_from_string(j.at("kind").get<std::string>());
  spec.lambda = number_field(j, "lambda", spec.lambda);
  spec.alpha = number_field(j, "alpha", spec.alpha);
  spec.q = number_field(j, "q", spec.q);
  spec.a = number_field(j, "a", spec.a);
  spec.k = number_field(j, "k", spec.k);
  spec.gamma = number_field(j, "gamma", spec.gamma);
  spec.k_scale = number_field(j, "k_scale", spec.k_scale);
  spec.validate();
  return spec;
}

std::string spec_to_json_text(const EntropySpec& spec) {
  ordered_json j;
  j["kind"] = to_string(spec.kind);
  switch (spec.kind) {
    case EntropyKind::BGS:
      break;
    case EntropyKind::Tsallis:
      j["q"] = spec.q;
      j["k_scale"] = spec.k_scale;
      break;
    case EntropyKind::Renyi:
      j["alpha"] = spec.alpha;
      break;
    case EntropyKind::NonTraceI:
      j["lambda"] = spec.lambda;
      j["alpha"] = spec.alpha;
      j["a"] = spec.a;
      break;
    case EntropyKind::NonTraceII:
      j["lambda"] = spec.lambda;
      j["alpha"] = spec.alpha;
      j["k"] = spec.k;
      break;
    case EntropyKind::NonTraceIII:
      j["lambda"] = spec.lambda;
      j["alpha"] = spec.alpha;
      j["gamma"] = spec.gamma;
      break;
    case EntropyKind::TraceI:
      j["lambda"] = spec.lambda;
      j["a"] = spec.a;
      break;
    case EntropyKind::TraceII:
      j["lambda"] = spec.lambda;
      j["k"] = spec.k;
      break;
    case EntropyKind::TraceIII:
      j["lambda"] = spec.lambda;
      j["gamma"] = spec.gamma;
      break;
    case EntropyKind::ZEntropy:
      j["alpha"] = spec.alpha;
      j["gamma"] = spec.gamma;
      break;
  }
  return j.dump();
}

}  // namespace groupent
