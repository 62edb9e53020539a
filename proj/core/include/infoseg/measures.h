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

#ifndef INFOSEG_MEASURES_H_
#define INFOSEG_MEASURES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "infoseg/population.h"
#include "infoseg/unit_space.h"

namespace infoseg {

// Which reading of a formula to evaluate. `kPaper` keeps the literal
// normalization, out-of-range values included; `kClassical` is the textbook
// index of the same name.
enum class Variant { kClassical, kPaper };

enum class Measure {
  kEvenness,
  kJointExposure,
  kConcentration,
  kCentralization,
  kClustering,
};

std::string_view variant_name(Variant variant);
std::string_view measure_name(Measure measure);
std::optional<Variant> parse_variant(std::string_view name);
std::optional<Measure> parse_measure(std::string_view name);

// Complement of a Gini coefficient over the group's unit masses.
//
// Classical: 1 - sum_ij |a_i - a_j| / (2 m sum_i a_i), always in [1/m, 1].
// Paper:     1 - sum_{i != j} |a_i - a_j| / (2 a_total a'_total), which is
//            not scale free and can leave [0, 1]; reported raw.
//
// Throws MeasureError when the group is empty, or for the paper variant when
// nobody is outside the group.
double evenness(const GroupDistribution& group, Variant variant = Variant::kClassical);

// sum_i (a_i / a_total) (b_i / total_i). Units where A has no mass contribute
// nothing; a unit with A mass but zero total is an inconsistent table.
double joint_exposure(const GroupDistribution& a, const GroupDistribution& b,
                      std::span<const double> unit_totals);

// Delta over topic shares n_i / n_total.
//
// Classical: 1/2 sum_i |a_i / a_total - n_i / n_total|, in [0, 1).
// Paper:     1/2 sum_i (a_i / a_total) (n_i / n_total).
double concentration(const GroupDistribution& group, const UnitSpace& space,
                     Variant variant = Variant::kClassical);

// Duncan centralization over cumulative shares. With units taken in
// `space.center_order` and X_i, Y_i the cumulative shares of A and B over the
// first i units, CI = sum_i (X_{i-1} Y_i - X_i Y_{i-1}). Positive when A sits
// closer to the center than B.
double centralization_index(const GroupDistribution& a, const GroupDistribution& b,
                            const UnitSpace& space);

// Kernel clustering with weights exp(-d_ij), self pairs included:
//
//   P   = sum_i (a_i / a_total) sum_j e^{-d_ij} a_j
//   Q   = sum_i (a_i / a_total) sum_j e^{-d_ij} total_j
//   R   = (a_total / m^2) sum_i sum_j e^{-d_ij}
//   IC  = (P - R) / (Q - R)
//
// Returns nullopt when Q - R vanishes (e.g. a single unit).
std::optional<double> clustering_index(const GroupDistribution& group,
                                       std::span<const double> unit_totals,
                                       const UnitSpace& space);

enum class RowStatus { kOk, kUndefined, kError };
std::string_view row_status_name(RowStatus status);

struct MeasureRow {
  Measure measure = Measure::kEvenness;
  Variant variant = Variant::kClassical;
  std::string group_a;
  std::string group_b;  // empty for single-group measures
  RowStatus status = RowStatus::kOk;
  double value = 0.0;  // meaningful only when status is kOk
  std::string message;
};

struct MeasureReport {
  std::string dataset_digest;
  std::string unit_space_digest;
  std::vector<MeasureRow> rows;
};

enum class VariantSelection { kClassical, kPaper, kBoth };

struct MeasureOptions {
  std::vector<Measure> measures = {Measure::kEvenness, Measure::kJointExposure,
                                   Measure::kConcentration, Measure::kCentralization,
                                   Measure::kClustering};
  VariantSelection variants = VariantSelection::kClassical;
  // nullopt means every pair: unordered for joint exposure, ordered for
  // centralization. An explicit list is used as given for both.
  std::optional<std::vector<std::pair<std::string, std::string>>> pairs;
  // External universe size for the paper evenness complement; the loaded
  // population when unset.
  std::optional<double> population_override;
};

// Evaluates every requested measure for every group or pair. Failures become
// rows with status kError or kUndefined; other rows are unaffected. Rows are
// ordered by measure, variant, then group positions in the table.
// Throws ValidationError only for mismatched units, pairs naming unknown
// groups, or a population override smaller than some group.
MeasureReport measure_all(const PersonhoodTable& table, const UnitSpace& space,
                          const MeasureOptions& options = {});

}  // namespace infoseg

#endif  // INFOSEG_MEASURES_H_
