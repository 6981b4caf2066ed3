#include "charrig/json_codec.hpp"

#include <limits>

#include "charrig/errors.hpp"

namespace charrig {

Json weight_to_json(const Weight& w) {
  Json arr = Json::array();
  for (int c : w.fundamental()) arr.push_back(c);
  return arr;
}

Weight weight_from_json(Rank l, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != l.value()) {
    throw InvariantViolation("expected an array of " + std::to_string(l.value()) +
                             " fundamental coordinates, got " + j.dump());
  }
  std::vector<int> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvariantViolation("non-integer coordinate in " + j.dump());
    const auto v = x.get<std::int64_t>();
    if (v < -(1 << 20) || v > (1 << 20)) throw InvariantViolation("coordinate out of range in " + j.dump());
    c.push_back(static_cast<int>(v));
  }
  return from_fundamental(l, c);
}

DominantWeight dominant_from_json(Rank l, const Json& j) {
  Weight w = weight_from_json(l, j);
  if (!w.is_dominant()) throw InvariantViolation("weight " + j.dump() + " is not dominant");
  return DominantWeight(std::move(w));
}

Json coefficient_to_json(const Coefficient& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return Json(c.convert_to<std::int64_t>());
  }
  return Json(c.str());
}

Coefficient coefficient_from_json(const Json& j) {
  if (j.is_number_integer()) return Coefficient(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      throw InvariantViolation("malformed integer string " + j.dump());
    }
    return Coefficient(s);
  }
  throw InvariantViolation("expected an integer coefficient, got " + j.dump());
}

Json terms_to_json(const CharElement& f, const char* key) {
  Json arr = Json::array();
  for (const auto& [mu, c] : f.terms()) {
    Json t;
    t[key] = weight_to_json(mu.weight());
    t["coeff"] = coefficient_to_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

CharElement terms_from_json(Rank l, const Json& j, const char* key) {
  if (!j.is_array()) throw InvariantViolation("expected a list of terms");
  CharElement f(l);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains(key) || !t.contains("coeff")) {
      throw InvariantViolation("malformed term " + t.dump());
    }
    const auto mu = dominant_from_json(l, t.at(key));
    const auto c = coefficient_from_json(t.at("coeff"));
    if (c == 0) throw InvariantViolation("stored zero coefficient at " + mu.str());
    if (f.coefficient(mu) != 0) throw InvariantViolation("duplicate term " + mu.str());
    f.add_term(mu, c);
  }
  return f;
}

Rank rank_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.at("rank").is_number_integer()) {
    throw InvariantViolation("document has no integer rank");
  }
  const auto r = j.at("rank").get<std::int64_t>();
  if (r < 1 || r > 64) throw InvariantViolation("rank out of range: " + std::to_string(r));
  return Rank(static_cast<int>(r));
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvariantViolation(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace charrig
