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

#ifndef INFOSEG_IO_H_
#define INFOSEG_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infoseg/leaning.h"
#include "infoseg/measures.h"
#include "infoseg/personhood.h"
#include "infoseg/population.h"
#include "infoseg/synthgen.h"
#include "infoseg/unit_space.h"

// Text formats. Person-level and source-level data are CSV with a fixed
// header; set-valued data and configuration are JSON objects carrying a
// "kind" field. All text is UTF-8 with LF newlines, and numbers always use a
// period as decimal point.
//
//   membership-log       CSV  person_id,group_id,unit_id
//   source-compositions  CSV  source_id,f_VC,f_C,f_M,f_L,f_VL
//   exact-set-counts     JSON {"kind", "group_axis"?, "records": [{"group", "access_set": [..], "count"}]}
//   union-observations   JSON {"kind", "group_axis"?, "records": [{"group", "units": [..], "reach"}]}
//   personhood-table     JSON {"kind", "group_axis", "units", "groups": [{"group", "people", "personhood"}],
//                              "unit_totals", "population"}
//   unit-space           JSON {"kind", "units": [{"id", "position"?, "topics"?}], "distances"?,
//                              "center"? | "center_order"?}
//   generator-config     JSON {"kind", "seed", "units", "groups": [{"group", "size", "preferences",
//                              "follow_counts"?, "selectivity"?}]}

namespace infoseg {

enum class DatasetKind {
  kMembershipLog,
  kExactSetCounts,
  kUnionObservations,
  kSourceCompositions,
  kPersonhoodTable,
};

std::string_view dataset_kind_name(DatasetKind kind);

struct DatasetManifest {
  DatasetKind kind = DatasetKind::kMembershipLog;
  std::string path;
  std::string group_axis;
  std::string checksum;  // sha256 of the file bytes, hex
};

// Identifies a dataset from its CSV header or JSON "kind". Throws ParseError
// when neither matches a known kind.
DatasetKind detect_dataset_kind(std::string_view text);
DatasetManifest describe_dataset(std::string path, std::string_view text);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

// Six significant digits, shortest form, locale independent.
std::string format_number(double value);

// Duplicate (person, unit) rows collapse onto their first occurrence.
std::vector<Membership> parse_membership_log(std::string_view text);
std::string emit_membership_log(const std::vector<Membership>& log);

// Duplicate (group, set) records are summed; one warning per merge is
// appended to `warnings` when given.
ExactSetCounts parse_exact_counts(std::string_view text, const UnitSpace& space,
                                  std::vector<std::string>* warnings = nullptr);
std::string emit_exact_counts(const ExactSetCounts& counts);

ObservationTable parse_union_observations(std::string_view text, const UnitSpace& space);
std::string emit_union_observations(const ObservationTable& obs);

PersonhoodTable parse_personhood_table(std::string_view text);
std::string emit_personhood_table(const PersonhoodTable& table);

UnitSpace parse_unit_space(std::string_view text);
std::string emit_unit_space(const UnitSpace& space);

std::vector<SourceComposition> parse_source_compositions(std::string_view text);
std::string emit_source_compositions(const std::vector<SourceComposition>& sources);

// CSV source_id,leaning,unit.
std::string emit_source_assignments(const std::vector<SourceAssignment>& assignments);

GeneratorConfig parse_generator_config(std::string_view text);

// Loads any dataset kind except source compositions and reduces it to a
// personhood table. Exact counts merged from duplicates add to `warnings`.
PersonhoodTable load_personhood_table(std::string_view text, const UnitSpace& space,
                                      std::vector<std::string>* warnings = nullptr);

enum class ReportFormat { kJson, kTsv };
std::string emit_report(const MeasureReport& report, ReportFormat format);

enum class PlotKind { kEvennessByGroup, kExposureOfGroup };
std::optional<PlotKind> parse_plot_kind(std::string_view name);

// Two-column CSV (label,value) sorted by descending value, ties by label.
// Evenness uses classical rows when present, else paper rows. Exposure uses
// joint-exposure rows whose first group is `group`. Throws ValidationError
// "no matching rows" when nothing qualifies.
std::string emit_plot_data(const MeasureReport& report, PlotKind kind,
                           std::string_view group = {});

}  // namespace infoseg

#endif  // INFOSEG_IO_H_
