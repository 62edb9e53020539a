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

#include "infoseg/measures.h"

#include <algorithm>
#include <cmath>

#include "infoseg/errors.h"

namespace infoseg {
namespace {

double mass_sum(const GroupDistribution& group) {
  double sum = 0.0;
  for (double a : group.mass) sum += a;
  return sum;
}

void require_mass(const GroupDistribution& group) {
  if (!(group.total > 0.0)) throw MeasureError("group '" + group.group_id + "' is empty");
}

void require_units(const GroupDistribution& group, std::size_t m) {
  if (group.mass.size() != m) {
    throw MeasureError("group '" + group.group_id + "' has " + std::to_string(group.mass.size()) +
                       " units, expected " + std::to_string(m));
  }
}

// sum_i sum_j |a_i - a_j| via the sorted form 2 sum_k (2k - m + 1) a_(k).
double pairwise_abs_difference(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const double m = static_cast<double>(values.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    sum += (2.0 * static_cast<double>(k) - m + 1.0) * values[k];
  }
  return 2.0 * sum;
}

}  // namespace

std::string_view variant_name(Variant variant) {
  switch (variant) {
    case Variant::kClassical: return "classical";
    case Variant::kPaper: return "paper";
  }
  return "?";
}

std::string_view measure_name(Measure measure) {
  switch (measure) {
    case Measure::kEvenness: return "evenness";
    case Measure::kJointExposure: return "joint_exposure";
    case Measure::kConcentration: return "concentration";
    case Measure::kCentralization: return "centralization";
    case Measure::kClustering: return "clustering";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : {Variant::kClassical, Variant::kPaper}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (Measure m : {Measure::kEvenness, Measure::kJointExposure, Measure::kConcentration,
                    Measure::kCentralization, Measure::kClustering}) {
    if (measure_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view row_status_name(RowStatus status) {
  switch (status) {
    case RowStatus::kOk: return "ok";
    case RowStatus::kUndefined: return "undefined";
    case RowStatus::kError: return "error";
  }
  return "?";
}

double evenness(const GroupDistribution& group, Variant variant) {
  require_mass(group);
  if (group.mass.empty()) throw MeasureError("evenness needs at least one unit");
  const double differences = pairwise_abs_difference(group.mass);
  if (variant == Variant::kPaper) {
    if (!(group.complement > 0.0)) {
      throw MeasureError("paper evenness of '" + group.group_id +
                         "' is undefined: nobody outside the group");
    }
    return 1.0 - differences / (2.0 * group.total * group.complement);
  }
  const double sum = mass_sum(group);
  if (!(sum > 0.0)) throw MeasureError("group '" + group.group_id + "' has no personhood mass");
  const double m = static_cast<double>(group.mass.size());
  return 1.0 - differences / (2.0 * m * sum);
}

double joint_exposure(const GroupDistribution& a, const GroupDistribution& b,
                      std::span<const double> unit_totals) {
  require_mass(a);
  require_units(a, unit_totals.size());
  require_units(b, unit_totals.size());
  double exposure = 0.0;
  for (std::size_t i = 0; i < unit_totals.size(); ++i) {
    if (a.mass[i] == 0.0) continue;
    if (!(unit_totals[i] > 0.0)) {
      throw MeasureError("inconsistent table: group '" + a.group_id +
                         "' has mass on a unit with zero total");
    }
    exposure += (a.mass[i] / a.total) * (b.mass[i] / unit_totals[i]);
  }
  return exposure;
}

double concentration(const GroupDistribution& group, const UnitSpace& space, Variant variant) {
  require_units(group, space.size());
  const double topics = static_cast<double>(space.topic_total());
  if (!(topics > 0.0)) throw MeasureError("concentration needs a positive topic total");
  require_mass(group);
  double delta = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double share = group.mass[i] / group.total;
    const double topic_share = static_cast<double>(space.topic_counts[i]) / topics;
    delta += variant == Variant::kPaper ? share * topic_share : std::abs(share - topic_share);
  }
  return 0.5 * delta;
}

double centralization_index(const GroupDistribution& a, const GroupDistribution& b,
                            const UnitSpace& space) {
  if (!space.has_center_order()) throw MeasureError("missing center_order");
  require_units(a, space.size());
  require_units(b, space.size());
  require_mass(a);
  require_mass(b);

  const std::size_t m = space.size();
  std::vector<double> x(m + 1, 0.0), y(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t unit = space.center_order[i];
    x[i + 1] = x[i] + a.mass[unit];
    y[i + 1] = y[i] + b.mass[unit];
  }
  const double x_total = x[m], y_total = y[m];
  if (!(x_total > 0.0) || !(y_total > 0.0)) throw MeasureError("zero-mass group");
  for (std::size_t i = 1; i <= m; ++i) {
    x[i] /= x_total;
    y[i] /= y_total;
  }
  double ci = 0.0;
  for (std::size_t i = 1; i <= m; ++i) ci += x[i - 1] * y[i] - x[i] * y[i - 1];
  return ci;
}

std::optional<double> clustering_index(const GroupDistribution& group,
                                       std::span<const double> unit_totals,
                                       const UnitSpace& space) {
  if (!space.has_distances()) throw MeasureError("clustering needs unit positions or distances");
  const std::size_t m = space.size();
  require_units(group, m);
  if (unit_totals.size() != m) throw MeasureError("unit totals do not match the unit space");
  require_mass(group);

  double own = 0.0;       // sum_i s_i sum_j K_ij a_j
  double everyone = 0.0;  // sum_i s_i sum_j K_ij total_j
  double kernel_sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double own_row = 0.0, everyone_row = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double k = std::exp(-space.distances[i][j]);
      kernel_sum += k;
      own_row += k * group.mass[j];
      everyone_row += k * unit_totals[j];
    }
    const double share = group.mass[i] / group.total;
    own += share * own_row;
    everyone += share * everyone_row;
  }
  const double baseline = group.total / static_cast<double>(m * m) * kernel_sum;
  const double denominator = everyone - baseline;
  const double scale = std::max({std::abs(everyone), std::abs(baseline), 1e-300});
  if (std::abs(denominator) <= 1e-12 * scale) return std::nullopt;
  return (own - baseline) / denominator;
}

MeasureReport measure_all(const PersonhoodTable& table, const UnitSpace& space,
                          const MeasureOptions& options) {
  if (table.unit_ids != space.unit_ids) {
    throw ValidationError("dataset units do not match the unit space");
  }
  const std::size_t groups = table.groups.size();
  std::vector<GroupDistribution> dists;
  dists.reserve(groups);
  for (const auto& id : table.groups) dists.push_back(group_distribution(table, id, options.population_override));

  std::vector<std::pair<std::size_t, std::size_t>> unordered, ordered;
  if (options.pairs) {
    for (const auto& [first, second] : *options.pairs) {
      const auto a = table.group_index(first);
      const auto b = table.group_index(second);
      if (!a) throw ValidationError("unknown group '" + first + "' in pair list");
      if (!b) throw ValidationError("unknown group '" + second + "' in pair list");
      unordered.emplace_back(*a, *b);
    }
    std::sort(unordered.begin(), unordered.end());
    unordered.erase(std::unique(unordered.begin(), unordered.end()), unordered.end());
    ordered = unordered;
  } else {
    for (std::size_t a = 0; a < groups; ++a) {
      for (std::size_t b = 0; b < groups; ++b) {
        if (a < b) unordered.emplace_back(a, b);
        if (a != b) ordered.emplace_back(a, b);
      }
    }
  }

  std::vector<Variant> variants;
  if (options.variants != VariantSelection::kPaper) variants.push_back(Variant::kClassical);
  if (options.variants != VariantSelection::kClassical) variants.push_back(Variant::kPaper);

  std::vector<Measure> measures = options.measures;
  std::sort(measures.begin(), measures.end());
  measures.erase(std::unique(measures.begin(), measures.end()), measures.end());

  MeasureReport report;
  auto emit = [&](Measure measure, Variant variant, std::size_t a, std::optional<std::size_t> b,
                  auto&& evaluate) {
    MeasureRow row;
    row.measure = measure;
    row.variant = variant;
    row.group_a = table.groups[a];
    if (b) row.group_b = table.groups[*b];
    try {
      const std::optional<double> value = evaluate();
      if (value) {
        row.value = *value;
      } else {
        row.status = RowStatus::kUndefined;
        row.message = "degenerate denominator";
      }
    } catch (const Error& e) {
      row.status = RowStatus::kError;
      row.message = e.what();
    }
    report.rows.push_back(std::move(row));
  };

  for (Measure measure : measures) {
    switch (measure) {
      case Measure::kEvenness:
        for (Variant v : variants) {
          for (std::size_t g = 0; g < groups; ++g) {
            emit(measure, v, g, std::nullopt,
                 [&] { return std::optional<double>(evenness(dists[g], v)); });
          }
        }
        break;
      case Measure::kJointExposure:
        for (auto [a, b] : unordered) {
          emit(measure, Variant::kPaper, a, b, [&] {
            return std::optional<double>(joint_exposure(dists[a], dists[b], table.unit_totals));
          });
        }
        break;
      case Measure::kConcentration:
        for (Variant v : variants) {
          for (std::size_t g = 0; g < groups; ++g) {
            emit(measure, v, g, std::nullopt,
                 [&] { return std::optional<double>(concentration(dists[g], space, v)); });
          }
        }
        break;
      case Measure::kCentralization:
        for (auto [a, b] : ordered) {
          emit(measure, Variant::kClassical, a, b, [&] {
            return std::optional<double>(centralization_index(dists[a], dists[b], space));
          });
        }
        break;
      case Measure::kClustering:
        for (std::size_t g = 0; g < groups; ++g) {
          emit(measure, Variant::kPaper, g, std::nullopt,
               [&] { return clustering_index(dists[g], table.unit_totals, space); });
        }
        break;
    }
  }
  return report;
}

}  // namespace infoseg
