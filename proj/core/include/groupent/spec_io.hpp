#ifndef GROUPENT_SPEC_IO_HPP
#define GROUPENT_SPEC_IO_HPP

#include <string>
#include <string_view>

#include "groupent/entropy.hpp"

namespace groupent {

/// Parse an EntropySpec from its JSON object form
///   {"kind": "...", "lambda": ..., "alpha": ..., "q": ..., "a": ...,
///    "k": ..., "gamma": ..., "k_scale": ...}
/// Absent fields take the defaults; unknown fields are ignored. Throws
/// std::invalid_argument on malformed JSON or bad parameters.
EntropySpec spec_from_json_text(std::string_view text);

/// Serialize a spec to its JSON object form. Only fields meaningful for the
/// kind are emitted.
std::string spec_to_json_text(const EntropySpec& spec);

}  // namespace groupent

#endif
