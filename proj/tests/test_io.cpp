#include "doctest.h"

#include <filesystem>

#include "charrig/errors.hpp"
#include "charrig/family_io.hpp"
#include "test_helpers.hpp"

using namespace charrig;
using charrig::test::dw;

namespace {

CharacterTable& shared_table() {
  static CharacterTable table;
  return table;
}

}  // namespace

TEST_CASE("weight and coefficient codecs") {
  CHECK(weight_to_json(dw({2, 1}).weight()) == Json::parse("[2,1]"));
  CHECK(dominant_from_json(Rank(2), Json::parse("[2,1]")) == dw({2, 1}));
  CHECK_THROWS_AS(dominant_from_json(Rank(2), Json::parse("[2,1,0]")), InvariantViolation);
  CHECK_THROWS_AS(dominant_from_json(Rank(2), Json::parse("[2,-1]")), std::exception);
  CHECK_THROWS_AS(dominant_from_json(Rank(2), Json::parse("[2.5,1]")), InvariantViolation);
  CHECK_THROWS_AS(dominant_from_json(Rank(2), Json::parse("\"x\"")), InvariantViolation);

  const Coefficient big("123456789012345678901234567890");
  CHECK(coefficient_to_json(big).is_string());
  CHECK(coefficient_from_json(coefficient_to_json(big)) == big);
  CHECK(coefficient_to_json(Coefficient(-7)) == Json(-7));
  CHECK(coefficient_from_json(Json(-7)) == -7);
  CHECK_THROWS_AS(coefficient_from_json(Json("12a")), InvariantViolation);
  CHECK_THROWS_AS(coefficient_from_json(Json(1.5)), InvariantViolation);
  CHECK_THROWS_AS(parse_document("{"), InvariantViolation);
}

TEST_CASE("family round trip") {
  const auto fam = weyl_family(Rank(2), 8, shared_table());
  const auto text = dump_document(family_to_json(fam));
  const auto back = family_from_json(parse_document(text));
  CHECK(back == fam);
  CHECK(dump_document(family_to_json(back)) == text);

  const auto bent = perturb_family(fam, dw({1, 1}), dw({0, 0}), -5);
  CHECK(family_from_json(family_to_json(bent)) == bent);

  const auto dir = std::filesystem::temp_directory_path() / "charrig_test_io";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "f.json", text);
  CHECK(read_text_file(dir / "f.json") == text);
  CHECK_THROWS(read_text_file(dir / "missing.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed families are rejected") {
  auto doc = family_to_json(weyl_family(Rank(2), 4, shared_table()));

  SUBCASE("missing member") {
    doc["members"].erase(1);
    CHECK_THROWS_AS(family_from_json(doc), InvariantViolation);
  }
  SUBCASE("duplicate member") {
    doc["members"].push_back(doc["members"][0]);
    CHECK_THROWS_AS(family_from_json(doc), InvariantViolation);
  }
  SUBCASE("leading coefficient") {
    doc["members"][1]["terms"][0]["coeff"] = 2;
    CHECK_THROWS_AS(family_from_json(doc), InvariantViolation);
  }
  SUBCASE("wrong rank") {
    doc["rank"] = 3;
    CHECK_THROWS_AS(family_from_json(doc), InvariantViolation);
  }
  SUBCASE("negative bound") {
    doc["bound"] = -1;
    CHECK_THROWS_AS(family_from_json(doc), InvariantViolation);
  }
  SUBCASE("not an object") {
    CHECK_THROWS_AS(family_from_json(Json::parse("[1,2]")), InvariantViolation);
  }
}

TEST_CASE("table round trip") {
  const auto table = StructureConstantTable::littlewood_richardson(Rank(2), 6, shared_table());
  const auto text = dump_document(table_to_json(table));
  const auto back = table_from_json(parse_document(text));
  CHECK(back.entries() == table.entries());
  CHECK(dump_document(table_to_json(back)) == text);

  auto doc = table_to_json(table);
  doc["entries"][0]["lambda"] = Json::parse("[9,9]");
  CHECK_THROWS_AS(table_from_json(doc), InvariantViolation);
}
