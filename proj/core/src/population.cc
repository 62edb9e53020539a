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

#include "infoseg/population.h"

#include <algorithm>
#include <cmath>

#include "infoseg/errors.h"

namespace infoseg {
namespace {

constexpr double kConservationTolerance = 1e-9;

double tolerance_for(double magnitude) {
  return kConservationTolerance * std::max(1.0, std::abs(magnitude));
}

}  // namespace

std::string format_access_set(AccessMask set, const std::vector<std::string>& unit_ids) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < unit_ids.size(); ++i) {
    if (!(set & (AccessMask{1} << i))) continue;
    if (!first) out += ',';
    out += unit_ids[i];
    first = false;
  }
  out += '}';
  return out;
}

ExactSetCounts::ExactSetCounts(std::vector<std::string> unit_ids, std::string group_axis)
    : unit_ids_(std::move(unit_ids)), group_axis_(std::move(group_axis)) {
  if (unit_ids_.size() > kMaxUnits) {
    throw ValidationError("at most " + std::to_string(kMaxUnits) + " units are supported, got " +
                          std::to_string(unit_ids_.size()));
  }
}

std::size_t ExactSetCounts::add_group(std::string_view group_id) {
  if (auto index = group_index(group_id)) return *index;
  groups_.emplace_back(group_id);
  counts_.emplace_back();
  return groups_.size() - 1;
}

std::optional<std::size_t> ExactSetCounts::group_index(std::string_view group_id) const {
  auto it = std::find(groups_.begin(), groups_.end(), group_id);
  if (it == groups_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - groups_.begin());
}

void ExactSetCounts::add(std::string_view group_id, AccessMask set, std::int64_t count) {
  if (set == 0) throw ValidationError("empty access set");
  if ((set & ~full_mask(unit_count())) != 0) throw ValidationError("access set has unknown unit");
  if (count < 0) throw ValidationError("negative count for " + format_access_set(set, unit_ids_));
  const std::size_t g = add_group(group_id);
  if (count == 0) return;
  counts_[g][set] += count;
}

std::int64_t ExactSetCounts::count(std::size_t group, AccessMask set) const {
  const auto& by_set = counts_.at(group);
  auto it = by_set.find(set);
  return it == by_set.end() ? 0 : it->second;
}

std::int64_t ExactSetCounts::group_population(std::size_t group) const {
  std::int64_t total = 0;
  for (const auto& [set, count] : counts_.at(group)) total += count;
  return total;
}

std::optional<std::size_t> PersonhoodTable::group_index(std::string_view group_id) const {
  auto it = std::find(groups.begin(), groups.end(), group_id);
  if (it == groups.end()) return std::nullopt;
  return static_cast<std::size_t>(it - groups.begin());
}

void validate_personhood_table(const PersonhoodTable& table) {
  const std::size_t m = table.unit_ids.size();
  const std::size_t groups = table.groups.size();
  if (m == 0) throw ValidationError("personhood table has no units");
  if (table.mass.size() != groups || table.people.size() != groups) {
    throw ValidationError("personhood table group arrays disagree in length");
  }
  if (table.unit_totals.size() != m) throw ValidationError("unit_totals must have one entry per unit");

  std::int64_t population = 0;
  std::vector<double> totals(m, 0.0);
  for (std::size_t g = 0; g < groups; ++g) {
    const auto& row = table.mass[g];
    if (row.size() != m) {
      throw ValidationError("group '" + table.groups[g] + "' has " + std::to_string(row.size()) +
                            " personhood entries, expected " + std::to_string(m));
    }
    if (table.people[g] < 0) throw ValidationError("group '" + table.groups[g] + "' has negative size");
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(row[i] >= 0.0) || !std::isfinite(row[i])) {
        throw ValidationError("group '" + table.groups[g] + "' has invalid personhood at unit '" +
                              table.unit_ids[i] + "'");
      }
      sum += row[i];
      totals[i] += row[i];
    }
    const double people = static_cast<double>(table.people[g]);
    if (std::abs(sum - people) > tolerance_for(people)) {
      throw ValidationError("group '" + table.groups[g] + "' personhood sums to " +
                            std::to_string(sum) + " but has " + std::to_string(table.people[g]) +
                            " people");
    }
    population += table.people[g];
  }
  if (population != table.population) {
    throw ValidationError("population does not equal the sum of group sizes");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(totals[i] - table.unit_totals[i]) > tolerance_for(totals[i])) {
      throw ValidationError("unit total of '" + table.unit_ids[i] +
                            "' does not equal the sum over groups");
    }
  }
}

GroupDistribution group_distribution(const PersonhoodTable& table, std::string_view group_id,
                                     std::optional<double> population_override) {
  const auto g = table.group_index(group_id);
  if (!g) throw ValidationError("unknown group '" + std::string(group_id) + "'");
  GroupDistribution dist;
  dist.group_id = table.groups[*g];
  dist.mass = table.mass[*g];
  dist.total = static_cast<double>(table.people[*g]);
  const double universe =
      population_override.value_or(static_cast<double>(table.population));
  if (universe < dist.total) {
    throw ValidationError("population override is smaller than group '" + dist.group_id + "'");
  }
  dist.complement = universe - dist.total;
  return dist;
}

GroupDistribution population_distribution(const PersonhoodTable& table) {
  GroupDistribution dist;
  dist.group_id = "*";
  dist.mass = table.unit_totals;
  dist.total = static_cast<double>(table.population);
  dist.complement = 0.0;
  return dist;
}

}  // namespace infoseg
