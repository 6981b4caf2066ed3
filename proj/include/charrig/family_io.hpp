#ifndef CHARRIG_FAMILY_IO_HPP
#define CHARRIG_FAMILY_IO_HPP

// File formats for character families and structure-constant tables.
//
// Family:  {"rank": l, "bound": B,
//           "members": [{"lambda": [..], "terms": [{"mu": [..], "coeff": c}, ..]}, ..]}
// Table:   {"rank": l,
//           "entries": [{"mu": [..], "nu": [..], "lambda": [..], "value": v}, ..]}
//
// Lists are in increasing processing order; weights are fundamental
// coordinates. Writing a loaded document reproduces it byte for byte.

#include <filesystem>
#include <string>

#include "charrig/json_codec.hpp"
#include "charrig/rigidity.hpp"

namespace charrig {

Json family_to_json(const CharacterFamily& fam);
// Throws InvariantViolation on malformed documents or broken invariants.
CharacterFamily family_from_json(const Json& doc);

Json table_to_json(const StructureConstantTable& table);
StructureConstantTable table_from_json(const Json& doc);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace charrig

#endif
