//
// Copyright 2026 The Infoseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "infoseg/io.h"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "infoseg/errors.h"

namespace infoseg {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr std::string_view kMembershipHeader = "person_id,group_id,unit_id";
constexpr std::string_view kCompositionHeader = "source_id,f_VC,f_C,f_M,f_L,f_VL";

// ---------------------------------------------------------------------------
// CSV

struct CsvLine {
  int number;
  std::vector<std::string_view> fields;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// Parses a header-led CSV with a fixed column count. Blank lines are skipped.
std::vector<CsvLine> read_csv(std::string_view text, std::string_view header) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines.front() != header) {
    throw ParseError("expected header '" + std::string(header) + "'", 1);
  }
  const std::size_t columns = split_fields(header).size();
  std::vector<CsvLine> rows;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const int line_number = static_cast<int>(n) + 1;
    const std::string_view line = lines[n];
    if (line.empty()) continue;
    if (line.find_first_of("\r\"") != std::string_view::npos) {
      throw ParseError("malformed row: carriage returns and quotes are not allowed", line_number);
    }
    auto fields = split_fields(line);
    if (fields.size() != columns) {
      throw ParseError("malformed row: expected " + std::to_string(columns) + " fields, got " +
                           std::to_string(fields.size()),
                       line_number);
    }
    for (auto field : fields) {
      if (field.empty()) throw ParseError("malformed row: empty field", line_number);
    }
    rows.push_back({line_number, std::move(fields)});
  }
  return rows;
}

double parse_double(std::string_view field, int line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError("malformed number '" + std::string(field) + "'", line);
  }
  return value;
}

// ---------------------------------------------------------------------------
// JSON

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json parse_json_of_kind(std::string_view text, std::string_view kind) {
  Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find("kind");
  if (it == doc.end() || !it->is_string() || it->get<std::string>() != kind) {
    throw ParseError("expected \"kind\": \"" + std::string(kind) + "\"");
  }
  return doc;
}

const Json& field(const Json& object, const char* name, const std::string& where) {
  if (!object.is_object()) throw ParseError(where + ": expected an object");
  auto it = object.find(name);
  if (it == object.end()) throw ParseError(where + ": missing \"" + name + "\"");
  return *it;
}

std::string string_field(const Json& object, const char* name, const std::string& where) {
  const Json& value = field(object, name, where);
  if (!value.is_string()) throw ParseError(where + ": \"" + name + "\" must be a string");
  return value.get<std::string>();
}

std::int64_t integer_field(const Json& object, const char* name, const std::string& where) {
  const Json& value = field(object, name, where);
  if (!value.is_number_integer()) throw ParseError(where + ": \"" + name + "\" must be an integer");
  return value.get<std::int64_t>();
}

double number_value(const Json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where + ": expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + ": expected a finite number");
  return x;
}

std::vector<double> number_array(const Json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : value) out.push_back(number_value(x, where));
  return out;
}

std::string optional_axis(const Json& doc) {
  auto it = doc.find("group_axis");
  if (it == doc.end()) return {};
  if (!it->is_string()) throw ParseError("\"group_axis\" must be a string");
  return it->get<std::string>();
}

const Json& records_of(const Json& doc) {
  const Json& records = field(doc, "records", "document");
  if (!records.is_array()) throw ParseError("\"records\" must be an array");
  return records;
}

// Optional "groups" list fixing group order, including empty groups.
std::vector<std::string> declared_groups(const Json& doc) {
  std::vector<std::string> groups;
  auto it = doc.find("groups");
  if (it == doc.end()) return groups;
  if (!it->is_array()) throw ParseError("\"groups\" must be an array of strings");
  for (const auto& g : *it) {
    if (!g.is_string()) throw ParseError("\"groups\" must be an array of strings");
    groups.push_back(g.get<std::string>());
  }
  return groups;
}

AccessMask unit_set(const Json& value, const UnitSpace& space, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array of unit ids");
  AccessMask set = 0;
  for (const auto& unit : value) {
    if (!unit.is_string()) throw ParseError(where + ": unit ids must be strings");
    const auto index = space.index_of(unit.get<std::string>());
    if (!index) throw ValidationError(where + ": unknown unit '" + unit.get<std::string>() + "'");
    const AccessMask bit = AccessMask{1} << *index;
    if (set & bit) throw ParseError(where + ": unit '" + unit.get<std::string>() + "' repeated");
    set |= bit;
  }
  if (set == 0) throw ValidationError(where + ": empty access set");
  return set;
}

OrderedJson unit_list(AccessMask set, const std::vector<std::string>& unit_ids) {
  OrderedJson out = OrderedJson::array();
  for (std::size_t i = 0; i < unit_ids.size(); ++i) {
    if (set & (AccessMask{1} << i)) out.push_back(unit_ids[i]);
  }
  return out;
}

std::string dump(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

double rounded(double value) {
  const std::string text = format_number(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

}  // namespace

std::string_view dataset_kind_name(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::kMembershipLog: return "membership-log";
    case DatasetKind::kExactSetCounts: return "exact-set-counts";
    case DatasetKind::kUnionObservations: return "union-observations";
    case DatasetKind::kSourceCompositions: return "source-compositions";
    case DatasetKind::kPersonhoodTable: return "personhood-table";
  }
  return "?";
}

DatasetKind detect_dataset_kind(std::string_view text) {
  const std::size_t start = text.find_first_not_of(" \t\n");
  if (start != std::string_view::npos && text[start] == '{') {
    const Json doc = parse_json(text);
    auto it = doc.find("kind");
    if (it == doc.end() || !it->is_string()) throw ParseError("JSON dataset lacks a \"kind\" field");
    const std::string kind = it->get<std::string>();
    for (DatasetKind k : {DatasetKind::kExactSetCounts, DatasetKind::kUnionObservations,
                          DatasetKind::kPersonhoodTable}) {
      if (dataset_kind_name(k) == kind) return k;
    }
    throw ParseError("unknown dataset kind '" + kind + "'");
  }
  const std::string_view header = text.substr(0, text.find('\n'));
  if (header == kMembershipHeader) return DatasetKind::kMembershipLog;
  if (header == kCompositionHeader) return DatasetKind::kSourceCompositions;
  throw ParseError("unrecognized dataset header '" + std::string(header) + "'", 1);
}

DatasetManifest describe_dataset(std::string path, std::string_view text) {
  DatasetManifest manifest;
  manifest.kind = detect_dataset_kind(text);
  manifest.path = std::move(path);
  if (manifest.kind != DatasetKind::kMembershipLog &&
      manifest.kind != DatasetKind::kSourceCompositions) {
    manifest.group_axis = optional_axis(parse_json(text));
  }
  manifest.checksum = sha256_hex(text);
  return manifest;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw InvariantError("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 6);
  if (ec != std::errc()) throw InvariantError("number formatting failed");
  return std::string(buffer, ptr);
}

// --- membership log --------------------------------------------------------

std::vector<Membership> parse_membership_log(std::string_view text) {
  std::vector<Membership> log;
  std::unordered_map<std::string, std::string> group_of;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& row : read_csv(text, kMembershipHeader)) {
    Membership m{std::string(row.fields[0]), std::string(row.fields[1]),
                 std::string(row.fields[2])};
    auto [it, inserted] = group_of.try_emplace(m.person_id, m.group_id);
    if (!inserted && it->second != m.group_id) {
      throw ParseError("person " + m.person_id + " in two groups", row.number);
    }
    if (!seen.emplace(m.person_id, m.unit_id).second) continue;
    log.push_back(std::move(m));
  }
  return log;
}

std::string emit_membership_log(const std::vector<Membership>& log) {
  std::string out(kMembershipHeader);
  out += '\n';
  for (const auto& m : log) {
    out += m.person_id;
    out += ',';
    out += m.group_id;
    out += ',';
    out += m.unit_id;
    out += '\n';
  }
  return out;
}

// --- exact counts ----------------------------------------------------------

ExactSetCounts parse_exact_counts(std::string_view text, const UnitSpace& space,
                                  std::vector<std::string>* warnings) {
  const Json doc = parse_json_of_kind(text, dataset_kind_name(DatasetKind::kExactSetCounts));
  ExactSetCounts counts(space.unit_ids, optional_axis(doc));
  for (const auto& g : declared_groups(doc)) counts.add_group(g);
  std::set<std::pair<std::string, AccessMask>> seen;
  const Json& records = records_of(doc);
  for (std::size_t r = 0; r < records.size(); ++r) {
    const std::string where = "record " + std::to_string(r + 1);
    const std::string group = string_field(records[r], "group", where);
    const AccessMask set = unit_set(field(records[r], "access_set", where), space, where);
    const std::int64_t count = integer_field(records[r], "count", where);
    if (count < 0) throw ValidationError(where + ": negative count");
    if (!seen.emplace(group, set).second && warnings) {
      warnings->push_back(where + ": duplicate record for group '" + group + "' and set " +
                          format_access_set(set, space.unit_ids) + "; counts summed");
    }
    counts.add(group, set, count);
  }
  return counts;
}

std::string emit_exact_counts(const ExactSetCounts& counts) {
  OrderedJson doc;
  doc["kind"] = dataset_kind_name(DatasetKind::kExactSetCounts);
  doc["group_axis"] = counts.group_axis();
  doc["groups"] = counts.groups();
  OrderedJson records = OrderedJson::array();
  for (std::size_t g = 0; g < counts.groups().size(); ++g) {
    for (const auto& [set, count] : counts.counts(g)) {
      OrderedJson record;
      record["group"] = counts.groups()[g];
      record["access_set"] = unit_list(set, counts.unit_ids());
      record["count"] = count;
      records.push_back(std::move(record));
    }
  }
  doc["records"] = std::move(records);
  return dump(doc);
}

// --- union observations ----------------------------------------------------

ObservationTable parse_union_observations(std::string_view text, const UnitSpace& space) {
  const Json doc = parse_json_of_kind(text, dataset_kind_name(DatasetKind::kUnionObservations));
  const std::size_t m = space.size();
  if (m > kMaxUnits) {
    throw ValidationError("at most " + std::to_string(kMaxUnits) + " units are supported");
  }
  const std::size_t n = std::size_t{1} << m;

  ObservationTable obs;
  obs.unit_ids = space.unit_ids;
  obs.group_axis = optional_axis(doc);
  std::vector<std::vector<bool>> present;
  auto group_slot = [&](const std::string& group) {
    auto it = std::find(obs.groups.begin(), obs.groups.end(), group);
    if (it != obs.groups.end()) return static_cast<std::size_t>(it - obs.groups.begin());
    obs.groups.push_back(group);
    obs.reach.emplace_back(n, 0);
    present.emplace_back(n, false);
    return obs.groups.size() - 1;
  };
  for (const auto& g : declared_groups(doc)) group_slot(g);

  const Json& records = records_of(doc);
  for (std::size_t r = 0; r < records.size(); ++r) {
    const std::string where = "record " + std::to_string(r + 1);
    const std::size_t g = group_slot(string_field(records[r], "group", where));
    const AccessMask set = unit_set(field(records[r], "units", where), space, where);
    const std::int64_t reach = integer_field(records[r], "reach", where);
    if (present[g][set]) {
      throw ParseError(where + ": duplicate observation for group '" + obs.groups[g] + "' and " +
                       format_access_set(set, space.unit_ids));
    }
    present[g][set] = true;
    obs.reach[g][set] = reach;
  }
  for (std::size_t g = 0; g < obs.groups.size(); ++g) {
    for (std::size_t t = 1; t < n; ++t) {
      if (!present[g][t]) {
        throw ValidationError("incomplete observation table: group '" + obs.groups[g] +
                              "' lacks " +
                              format_access_set(static_cast<AccessMask>(t), space.unit_ids));
      }
    }
  }
  check_observations(obs);
  return obs;
}

std::string emit_union_observations(const ObservationTable& obs) {
  OrderedJson doc;
  doc["kind"] = dataset_kind_name(DatasetKind::kUnionObservations);
  doc["group_axis"] = obs.group_axis;
  doc["groups"] = obs.groups;
  OrderedJson records = OrderedJson::array();
  for (std::size_t g = 0; g < obs.groups.size(); ++g) {
    for (std::size_t t = 1; t < obs.reach[g].size(); ++t) {
      OrderedJson record;
      record["group"] = obs.groups[g];
      record["units"] = unit_list(static_cast<AccessMask>(t), obs.unit_ids);
      record["reach"] = obs.reach[g][t];
      records.push_back(std::move(record));
    }
  }
  doc["records"] = std::move(records);
  return dump(doc);
}

// --- personhood table ------------------------------------------------------

PersonhoodTable parse_personhood_table(std::string_view text) {
  const Json doc = parse_json_of_kind(text, dataset_kind_name(DatasetKind::kPersonhoodTable));
  PersonhoodTable table;
  table.group_axis = optional_axis(doc);
  const Json& units = field(doc, "units", "document");
  if (!units.is_array()) throw ParseError("\"units\" must be an array");
  for (const auto& u : units) {
    if (!u.is_string()) throw ParseError("\"units\" must hold strings");
    table.unit_ids.push_back(u.get<std::string>());
  }
  const Json& groups = field(doc, "groups", "document");
  if (!groups.is_array()) throw ParseError("\"groups\" must be an array");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::string where = "group " + std::to_string(g + 1);
    table.groups.push_back(string_field(groups[g], "group", where));
    table.people.push_back(integer_field(groups[g], "people", where));
    table.mass.push_back(number_array(field(groups[g], "personhood", where), where));
  }
  table.unit_totals = number_array(field(doc, "unit_totals", "document"), "unit_totals");
  table.population = integer_field(doc, "population", "document");
  std::set<std::string_view> distinct(table.groups.begin(), table.groups.end());
  if (distinct.size() != table.groups.size()) throw ValidationError("duplicate group id");
  validate_personhood_table(table);
  return table;
}

std::string emit_personhood_table(const PersonhoodTable& table) {
  OrderedJson doc;
  doc["kind"] = dataset_kind_name(DatasetKind::kPersonhoodTable);
  doc["group_axis"] = table.group_axis;
  doc["units"] = table.unit_ids;
  OrderedJson groups = OrderedJson::array();
  for (std::size_t g = 0; g < table.groups.size(); ++g) {
    OrderedJson group;
    group["group"] = table.groups[g];
    group["people"] = table.people[g];
    group["personhood"] = table.mass[g];
    groups.push_back(std::move(group));
  }
  doc["groups"] = std::move(groups);
  doc["unit_totals"] = table.unit_totals;
  doc["population"] = table.population;
  return dump(doc);
}

// --- unit space ------------------------------------------------------------

UnitSpace parse_unit_space(std::string_view text) {
  const Json doc = parse_json_of_kind(text, "unit-space");
  const Json& units = field(doc, "units", "unit space");
  if (!units.is_array() || units.empty()) throw ParseError("\"units\" must be a nonempty array");

  UnitSpace space;
  std::size_t with_position = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const std::string where = "unit " + std::to_string(i + 1);
    space.unit_ids.push_back(string_field(units[i], "id", where));
    if (auto it = units[i].find("position"); it != units[i].end()) {
      space.positions.push_back(it->is_array() ? number_array(*it, where)
                                               : std::vector<double>{number_value(*it, where)});
      ++with_position;
    }
    if (auto it = units[i].find("topics"); it != units[i].end()) {
      if (!it->is_number_integer()) throw ParseError(where + ": \"topics\" must be an integer");
      space.topic_counts.push_back(it->get<std::int64_t>());
    } else {
      space.topic_counts.push_back(0);
    }
  }
  if (with_position != 0 && with_position != units.size()) {
    throw ParseError("either every unit or no unit must have a position");
  }
  if (auto it = doc.find("distances"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("\"distances\" must be a matrix");
    for (const auto& row : *it) space.distances.push_back(number_array(row, "distances"));
  }

  const bool has_center = doc.contains("center");
  const bool has_order = doc.contains("center_order");
  if (has_center && has_order) throw ParseError("give either \"center\" or \"center_order\", not both");
  if (has_order) {
    const Json& order = doc["center_order"];
    if (!order.is_array()) throw ParseError("\"center_order\" must be an array of unit ids");
    for (const auto& id : order) {
      if (!id.is_string()) throw ParseError("\"center_order\" must be an array of unit ids");
      const auto index = space.index_of(id.get<std::string>());
      if (!index) throw ValidationError("center_order names unknown unit '" + id.get<std::string>() + "'");
      space.center_order.push_back(*index);
    }
  }

  space = validate_unit_space(std::move(space));
  if (has_center) {
    const std::string center = string_field(doc, "center", "unit space");
    const auto index = space.index_of(center);
    if (!index) throw ValidationError("unknown center unit '" + center + "'");
    space.center_order = order_by_distance_from(space, *index);
  }
  return space;
}

std::string emit_unit_space(const UnitSpace& space) {
  OrderedJson doc;
  doc["kind"] = "unit-space";
  OrderedJson units = OrderedJson::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    OrderedJson unit;
    unit["id"] = space.unit_ids[i];
    if (space.has_positions()) unit["position"] = space.positions[i];
    unit["topics"] = i < space.topic_counts.size() ? space.topic_counts[i] : 0;
    units.push_back(std::move(unit));
  }
  doc["units"] = std::move(units);
  if (space.has_distances()) doc["distances"] = space.distances;
  if (space.has_center_order()) {
    OrderedJson order = OrderedJson::array();
    for (std::size_t i : space.center_order) order.push_back(space.unit_ids[i]);
    doc["center_order"] = std::move(order);
  }
  return dump(doc);
}

// --- source compositions ---------------------------------------------------

std::vector<SourceComposition> parse_source_compositions(std::string_view text) {
  std::vector<SourceComposition> sources;
  std::unordered_set<std::string> seen;
  for (const auto& row : read_csv(text, kCompositionHeader)) {
    std::array<double, 5> f{};
    for (std::size_t k = 0; k < 5; ++k) f[k] = parse_double(row.fields[k + 1], row.number);
    std::string id(row.fields[0]);
    if (!seen.insert(id).second) throw ParseError("duplicate source id '" + id + "'", row.number);
    try {
      sources.push_back({std::move(id), AudienceComposition::from_fractions(f)});
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), row.number);
    }
  }
  return sources;
}

std::string emit_source_compositions(const std::vector<SourceComposition>& sources) {
  std::string out(kCompositionHeader);
  out += '\n';
  for (const auto& source : sources) {
    out += source.source_id;
    for (double f : source.composition.fractions()) {
      // Shortest round-trip form.
      char buffer[64];
      const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), f);
      out += ',';
      out.append(buffer, ptr);
    }
    out += '\n';
  }
  return out;
}

std::string emit_source_assignments(const std::vector<SourceAssignment>& assignments) {
  std::string out = "source_id,leaning,unit\n";
  for (const auto& a : assignments) {
    out += a.source_id + ',' + format_number(a.score) + ',' +
           std::string(political_unit_label(a.unit)) + '\n';
  }
  return out;
}

// --- generator config ------------------------------------------------------

GeneratorConfig parse_generator_config(std::string_view text) {
  const Json doc = parse_json_of_kind(text, "generator-config");
  GeneratorConfig config;
  const Json& seed = field(doc, "seed", "generator config");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    throw ParseError("\"seed\" must be a nonnegative integer");
  }
  config.seed = seed.get<std::uint64_t>();
  const Json& units = field(doc, "units", "generator config");
  if (!units.is_array()) throw ParseError("\"units\" must be an array of unit ids");
  for (const auto& u : units) {
    if (!u.is_string()) throw ParseError("\"units\" must be an array of unit ids");
    config.unit_ids.push_back(u.get<std::string>());
  }
  const Json& groups = field(doc, "groups", "generator config");
  if (!groups.is_array()) throw ParseError("\"groups\" must be an array");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::string where = "group " + std::to_string(g + 1);
    GroupProfile profile;
    profile.group_id = string_field(groups[g], "group", where);
    profile.size = integer_field(groups[g], "size", where);
    profile.preferences = number_array(field(groups[g], "preferences", where), where);
    if (auto it = groups[g].find("follow_counts"); it != groups[g].end()) {
      profile.follow_counts = number_array(*it, where);
    }
    if (auto it = groups[g].find("selectivity"); it != groups[g].end()) {
      profile.selectivity = number_value(*it, where);
    }
    config.groups.push_back(std::move(profile));
  }
  validate_generator_config(config);
  return config;
}

// --- loading ---------------------------------------------------------------

PersonhoodTable load_personhood_table(std::string_view text, const UnitSpace& space,
                                      std::vector<std::string>* warnings) {
  switch (detect_dataset_kind(text)) {
    case DatasetKind::kMembershipLog:
      return personhoods(exact_counts_from_memberships(parse_membership_log(text), space.unit_ids));
    case DatasetKind::kExactSetCounts:
      return personhoods(parse_exact_counts(text, space, warnings));
    case DatasetKind::kUnionObservations:
      return personhoods(exact_counts_from_union_observations(parse_union_observations(text, space)));
    case DatasetKind::kPersonhoodTable: {
      PersonhoodTable table = parse_personhood_table(text);
      if (table.unit_ids != space.unit_ids) {
        throw ValidationError("personhood table units do not match the unit space");
      }
      return table;
    }
    case DatasetKind::kSourceCompositions:
      break;
  }
  throw ValidationError("source compositions carry no personhoods; use classify");
}

// --- reports ---------------------------------------------------------------

std::string emit_report(const MeasureReport& report, ReportFormat format) {
  if (format == ReportFormat::kTsv) {
    std::string out = "measure\tvariant\tgroup_a\tgroup_b\tstatus\tvalue\tmessage\n";
    for (const auto& row : report.rows) {
      out += std::string(measure_name(row.measure)) + '\t' + std::string(variant_name(row.variant)) +
             '\t' + row.group_a + '\t' + row.group_b + '\t' +
             std::string(row_status_name(row.status)) + '\t' +
             (row.status == RowStatus::kOk ? format_number(row.value) : std::string()) + '\t' +
             row.message + '\n';
    }
    return out;
  }
  OrderedJson doc;
  doc["dataset_digest"] = report.dataset_digest;
  doc["unit_space_digest"] = report.unit_space_digest;
  OrderedJson rows = OrderedJson::array();
  for (const auto& row : report.rows) {
    OrderedJson r;
    r["measure"] = measure_name(row.measure);
    r["variant"] = variant_name(row.variant);
    r["group_a"] = row.group_a;
    if (!row.group_b.empty()) r["group_b"] = row.group_b;
    r["status"] = row_status_name(row.status);
    if (row.status == RowStatus::kOk) {
      r["value"] = rounded(row.value);
    } else {
      r["message"] = row.message;
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return dump(doc);
}

std::optional<PlotKind> parse_plot_kind(std::string_view name) {
  if (name == "evenness-by-group") return PlotKind::kEvennessByGroup;
  if (name == "exposure-of-group") return PlotKind::kExposureOfGroup;
  return std::nullopt;
}

std::string emit_plot_data(const MeasureReport& report, PlotKind kind, std::string_view group) {
  std::vector<std::pair<std::string, double>> points;
  if (kind == PlotKind::kEvennessByGroup) {
    for (Variant variant : {Variant::kClassical, Variant::kPaper}) {
      for (const auto& row : report.rows) {
        if (row.measure == Measure::kEvenness && row.variant == variant &&
            row.status == RowStatus::kOk) {
          points.emplace_back(row.group_a, row.value);
        }
      }
      if (!points.empty()) break;
    }
  } else {
    for (const auto& row : report.rows) {
      if (row.measure == Measure::kJointExposure && row.status == RowStatus::kOk &&
          row.group_a == group) {
        points.emplace_back(row.group_b, row.value);
      }
    }
  }
  if (points.empty()) throw ValidationError("no matching rows");
  std::stable_sort(points.begin(), points.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  std::string out = "label,value\n";
  for (const auto& [label, value] : points) out += label + ',' + format_number(value) + '\n';
  return out;
}

}  // namespace infoseg
