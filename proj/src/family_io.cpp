#include "charrig/family_io.hpp"

#include <fstream>
#include <sstream>

#include "charrig/errors.hpp"

namespace charrig {

Json family_to_json(const CharacterFamily& fam) {
  Json doc;
  doc["rank"] = fam.rank().value();
  doc["bound"] = fam.bound();
  Json members = Json::array();
  for (const auto& [la, f] : fam.members()) {
    Json m;
    m["lambda"] = weight_to_json(la.weight());
    m["terms"] = terms_to_json(f, "mu");
    members.push_back(std::move(m));
  }
  doc["members"] = std::move(members);
  return doc;
}

CharacterFamily family_from_json(const Json& doc) {
  const Rank l = rank_from_json(doc);
  if (!doc.contains("bound") || !doc.at("bound").is_number_integer()) {
    throw InvariantViolation("family document has no integer bound");
  }
  const auto bound = doc.at("bound").get<std::int64_t>();
  if (bound < 0 || bound > 100000) throw InvariantViolation("family bound out of range");
  if (!doc.contains("members") || !doc.at("members").is_array()) {
    throw InvariantViolation("family document has no member list");
  }
  CharacterFamily::Members members;
  for (const auto& m : doc.at("members")) {
    if (!m.is_object() || !m.contains("lambda") || !m.contains("terms")) {
      throw InvariantViolation("malformed family member " + m.dump());
    }
    const auto la = dominant_from_json(l, m.at("lambda"));
    if (!members.emplace(la, terms_from_json(l, m.at("terms"), "mu")).second) {
      throw InvariantViolation("duplicate family member " + la.str());
    }
  }
  return CharacterFamily(l, bound, std::move(members));
}

Json table_to_json(const StructureConstantTable& table) {
  Json doc;
  doc["rank"] = table.rank().value();
  Json entries = Json::array();
  for (const auto& [key, v] : table.entries()) {
    const auto& [mu, nu, la] = key;
    Json e;
    e["mu"] = weight_to_json(mu.weight());
    e["nu"] = weight_to_json(nu.weight());
    e["lambda"] = weight_to_json(la.weight());
    e["value"] = coefficient_to_json(v);
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

StructureConstantTable table_from_json(const Json& doc) {
  const Rank l = rank_from_json(doc);
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw InvariantViolation("table document has no entry list");
  }
  StructureConstantTable table(l);
  for (const auto& e : doc.at("entries")) {
    if (!e.is_object() || !e.contains("mu") || !e.contains("nu") || !e.contains("lambda") || !e.contains("value")) {
      throw InvariantViolation("malformed table entry " + e.dump());
    }
    table.set(dominant_from_json(l, e.at("mu")), dominant_from_json(l, e.at("nu")),
              dominant_from_json(l, e.at("lambda")), coefficient_from_json(e.at("value")));
  }
  return table;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace charrig
