#ifndef CHARRIG_JSON_CODEC_HPP
#define CHARRIG_JSON_CODEC_HPP

// JSON encoding of weights, coefficients and ring elements. Weights are
// written as fundamental-coordinate arrays. Coefficients are JSON integers
// when they fit in 64 bits and decimal strings otherwise. Every decoder
// throws InvariantViolation on malformed input.

#include <string>

#include "json.hpp"

#include "charrig/char_ring.hpp"

namespace charrig {

using Json = nlohmann::ordered_json;

Json weight_to_json(const Weight& w);
Weight weight_from_json(Rank l, const Json& j);
DominantWeight dominant_from_json(Rank l, const Json& j);

Json coefficient_to_json(const Coefficient& c);
Coefficient coefficient_from_json(const Json& j);

// [{"<key>": [..], "coeff": c}, ...] in increasing processing order.
Json terms_to_json(const CharElement& f, const char* key = "weight");
CharElement terms_from_json(Rank l, const Json& j, const char* key = "weight");

Rank rank_from_json(const Json& j);

// Pretty-printed with a trailing newline.
std::string dump_document(const Json& j);
Json parse_document(const std::string& text);

}  // namespace charrig

#endif
