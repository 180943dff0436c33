#pragma once

// JSON family files:
//
//   {"type": "ultraspherical", "lambda": "-1/4"}
//   {"type": "monic-symmetric", "a": {"kind": "formula", "name": "hermite-monic"}}
//   {"type": "symmetric-unit",  "a": {"kind": "list", "values": ["2/3", "0.6"]}}
//   {"type": "general", "a": {...}, "b": {...}, "c": {...}}
//
// Numbers are strings ("p/q" or decimal literals) so they stay exact.

#include "turankit/families.hpp"

#include <filesystem>
#include <string>

namespace turankit::cli {

/// Throws std::invalid_argument on malformed documents.
FamilySpec parse_family_json(const std::string& text);
FamilySpec read_family_file(const std::filesystem::path& path);

/// Only list and the two named formulas can be written; user Formula
/// sequences throw std::invalid_argument.
std::string family_to_json(const FamilySpec& family);
void write_family_file(const FamilySpec& family, const std::filesystem::path& path);

}  // namespace turankit::cli
