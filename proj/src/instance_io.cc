// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ofl/instance_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ofl/errors.h"

namespace ofl {
namespace {

using nlohmann::json;

std::string where(const std::string& field, std::size_t index) {
  return field + "[" + std::to_string(index) + "]";
}

Rational parse_rational_field(const json& value, const std::string& field,
                              std::size_t index) {
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where(field, index) + ": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    return Rational::parse(value.dump());
  }
  throw ParseError(where(field, index) +
                   ": expected a rational string such as \"3/4\"");
}

std::vector<Rational> parse_rational_list(const json& doc,
                                          const std::string& field) {
  if (!doc.contains(field) || !doc.at(field).is_array()) {
    throw ParseError(field + ": missing or not an array");
  }
  std::vector<Rational> out;
  const json& arr = doc.at(field);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(parse_rational_field(arr[i], field, i));
  }
  return out;
}

bool parse_flag(const json& v, std::size_t index, int which) {
  const std::string at = where("preferences", index) + "[" +
                         std::to_string(which) + "]";
  if (v.is_number_integer()) {
    const auto x = v.get<long long>();
    if (x == 0 || x == 1) return x == 1;
  }
  throw ParseError(at + ": expected 0 or 1");
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");

  if (doc.contains("schema_version")) {
    const json& v = doc.at("schema_version");
    if (!v.is_number_integer() || v.get<long long>() != kSchemaVersion) {
      throw ParseError("schema_version: unsupported value " + v.dump());
    }
  }

  std::vector<Rational> positions = parse_rational_list(doc, "positions");
  std::vector<Rational> candidates = parse_rational_list(doc, "candidates");

  if (!doc.contains("preferences") || !doc.at("preferences").is_array()) {
    throw ParseError("preferences: missing or not an array");
  }
  const json& prefs_json = doc.at("preferences");
  std::vector<Preference> prefs;
  for (std::size_t i = 0; i < prefs_json.size(); ++i) {
    const json& row = prefs_json[i];
    if (!row.is_array() || row.size() != 2) {
      throw ParseError(where("preferences", i) + ": expected a [0/1, 0/1] pair");
    }
    Preference p{parse_flag(row[0], i, 0), parse_flag(row[1], i, 1)};
    if (!p.affects_f1 && !p.affects_f2) {
      throw ParseError(where("preferences", i) +
                       ": agent affected by neither facility");
    }
    prefs.push_back(p);
  }

  if (positions.empty()) throw ParseError("positions: at least one agent required");
  if (prefs.size() != positions.size()) {
    throw ParseError("preferences: expected " + std::to_string(positions.size()) +
                     " rows, got " + std::to_string(prefs.size()));
  }
  if (candidates.size() < 2) {
    throw ParseError("candidates: at least two required, got " +
                     std::to_string(candidates.size()));
  }

  Metadata metadata;
  if (doc.contains("metadata")) {
    const json& m = doc.at("metadata");
    if (!m.is_object()) throw ParseError("metadata: expected an object");
    for (const auto& [key, value] : m.items()) {
      if (!value.is_string()) {
        throw ParseError("metadata." + key + ": expected a string");
      }
      metadata[key] = value.get<std::string>();
    }
  }
  return Instance::create(std::move(positions), std::move(prefs),
                          std::move(candidates), std::move(metadata));
}

std::string emit_instance(const Instance& instance) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  json positions = json::array();
  for (const auto& x : instance.positions()) positions.push_back(x.str());
  json prefs = json::array();
  for (const auto& p : instance.preferences()) {
    prefs.push_back({p.affects_f1 ? 1 : 0, p.affects_f2 ? 1 : 0});
  }
  json cands = json::array();
  for (const auto& c : instance.candidates()) cands.push_back(c.str());
  doc["positions"] = std::move(positions);
  doc["preferences"] = std::move(prefs);
  doc["candidates"] = std::move(cands);
  doc["metadata"] = json::object();
  for (const auto& [k, v] : instance.metadata()) doc["metadata"][k] = v;
  return doc.dump(2) + "\n";
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write instance file '" + path + "'");
  out << emit_instance(instance);
}

}  // namespace ofl
