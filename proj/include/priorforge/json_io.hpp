#pragma once

#include "priorforge/structure.hpp"

#include <json.hpp>

#include <filesystem>
#include <string_view>

namespace priorforge {

using Json = nlohmann::ordered_json;

/// Version tag carried by every document this library writes.
inline constexpr const char* kSchemaTag = "prior-forge/1";

/// Accepts a JSON integer, a string "a" / "a/b", or {"num": .., "den": ..}.
/// Floating-point numbers are rejected. Throws ParseError.
Rational parse_rational(const Json& value);

/// Rationals are always written as strings ("3", "-1/2").
Json rational_to_json(const Rational& value);
Json rationals_to_json(std::span<const Rational> values);

/// Reads a structure document (see docs/schema.md) into unvalidated form.
/// Throws ParseError on schema violations.
RawStructure parse_structure(const Json& doc);

/// parse_structure followed by validate_structure.
InformationStructure structure_from_json(const Json& doc);
InformationStructure structure_from_text(std::string_view text);
InformationStructure load_structure(const std::filesystem::path& path);

/// Canonical per-cell document.
Json structure_to_json(const InformationStructure& T);

/// {"distribution": [...]} in state order, or an object keyed by state label.
/// A bare array or object is accepted as well.
Distribution parse_distribution(const Json& doc, const InformationStructure& T);
Distribution load_distribution(const std::filesystem::path& path, const InformationStructure& T);
Json distribution_to_json(const Distribution& p, const InformationStructure& T);

/// {"payoffs": {player: [...] or {state: value}}}. Players left out get the
/// zero payoff.
PayoffFamily parse_payoffs(const Json& doc, const InformationStructure& T);
PayoffFamily load_payoffs(const std::filesystem::path& path, const InformationStructure& T);
Json payoffs_to_json(const PayoffFamily& f, const InformationStructure& T);

Json state_set_to_json(const StateSet& S, const InformationStructure& T);

/// Reads and parses a JSON file. Throws ParseError.
Json read_json_file(const std::filesystem::path& path);

}  // namespace priorforge
