#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilekit/iso.hpp"
#include "tilekit/orbit.hpp"

namespace tilekit {

using Json = nlohmann::ordered_json;

/// {"dim", "k", "code", "canonical"} plus "source_class" when given.
Json code_record(const Code& c, const std::optional<std::string>& source_class = std::nullopt);
/// {"representative", "class_size_in_input", "canonical", "tp", "profile"}.
Json class_record(const IsoClass& cls);
Json profile_json(const MatrixProfile& p);
/// Orbit statistics with big values as decimal strings.
Json orbit_record(const Code& c, const OrbitStats& s);

/// Code from the "code" or "representative" field. Throws ParseError.
Code record_code(const Json& record);

/// One JSON value per non-blank line. Throws ParseError with the line number.
std::vector<Json> read_jsonl(std::istream& in);
void write_jsonl(std::ostream& out, const std::vector<Json>& records);

}  // namespace tilekit
