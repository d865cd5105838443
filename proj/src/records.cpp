#include "tilekit/records.hpp"

#include <istream>
#include <ostream>

#include "tilekit/error.hpp"
#include "tilekit/text_format.hpp"

namespace tilekit {

namespace {

Json words_json(const Code& c) {
  Json out = Json::array();
  for (const auto& w : c) out.push_back(w.str());
  return out;
}

}  // namespace

Json code_record(const Code& c, const std::optional<std::string>& source_class) {
  Json r;
  r["dim"] = c.dim();
  r["k"] = c.size();
  r["code"] = words_json(c);
  r["canonical"] = canonical_key(c);
  if (source_class) r["source_class"] = *source_class;
  return r;
}

Json profile_json(const MatrixProfile& p) {
  Json rows = Json::array();
  for (const auto& row : p.rows) {
    Json entries = Json::array();
    for (const auto& [x, y] : row) {
      if (x + y > 0) entries.push_back(Json::array({x, y}));
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

Json class_record(const IsoClass& cls) {
  Json r;
  r["representative"] = words_json(cls.representative);
  r["class_size_in_input"] = cls.multiplicity;
  r["canonical"] = cls.key;
  r["tp"] = cls.tp;
  r["profile"] = profile_json(cls.profile);
  return r;
}

Json orbit_record(const Code& c, const OrbitStats& s) {
  Json r;
  r["code"] = words_json(c);
  r["k"] = s.k;
  r["sigma"] = s.sigma_size.str();
  r["stabilizer"] = s.stabilizer.str();
  r["o_min"] = s.o_min.str();
  r["o_full"] = s.o_full.str();
  return r;
}

Code record_code(const Json& record) {
  const char* field = record.contains("code") ? "code" : "representative";
  if (!record.contains(field) || !record[field].is_array()) {
    throw ParseError(1, 1, "record has no code or representative array");
  }
  std::string text;
  for (const auto& w : record[field]) {
    if (!w.is_string()) throw ParseError(1, 1, "word is not a string");
    text += w.get<std::string>();
    text += '\n';
  }
  return parse_code(text);
}

std::vector<Json> read_jsonl(std::istream& in) {
  std::vector<Json> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(n, e.byte, "invalid JSON");
    }
  }
  return out;
}

void write_jsonl(std::ostream& out, const std::vector<Json>& records) {
  for (const auto& r : records) out << r.dump() << '\n';
}

}  // namespace tilekit
