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

#include "infoseg/personhood.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "infoseg/errors.h"

namespace infoseg {
namespace {

std::size_t mask_count(std::size_t m) { return std::size_t{1} << m; }

void check_unit_count(std::size_t m) {
  if (m > kMaxUnits) {
    throw ValidationError("at most " + std::to_string(kMaxUnits) + " units are supported, got " +
                          std::to_string(m));
  }
}

// In place: f[X] <- sum of f[B] over B in X.
void subset_sum(std::vector<std::int64_t>& f, std::size_t m) {
  for (std::size_t bit = 0; bit < m; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (x & step) f[x] += f[x ^ step];
    }
  }
}

// Inverse of subset_sum.
void moebius(std::vector<std::int64_t>& f, std::size_t m) {
  for (std::size_t bit = 0; bit < m; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (x & step) f[x] -= f[x ^ step];
    }
  }
}

}  // namespace

ExactSetCounts exact_counts_from_memberships(std::span<const Membership> log,
                                             const std::vector<std::string>& unit_ids,
                                             std::string group_axis) {
  ExactSetCounts counts(unit_ids, std::move(group_axis));
  std::unordered_map<std::string_view, std::size_t> unit_index;
  for (std::size_t i = 0; i < unit_ids.size(); ++i) unit_index.emplace(unit_ids[i], i);

  struct Person {
    std::string_view group;
    AccessMask set = 0;
  };
  std::vector<std::string_view> person_order;
  std::unordered_map<std::string_view, Person> people;
  for (const auto& row : log) {
    auto unit = unit_index.find(row.unit_id);
    if (unit == unit_index.end()) throw ValidationError("unknown unit '" + row.unit_id + "'");
    counts.add_group(row.group_id);
    auto [it, inserted] = people.try_emplace(row.person_id, Person{row.group_id, 0});
    if (inserted) {
      person_order.push_back(row.person_id);
    } else if (it->second.group != row.group_id) {
      throw ValidationError("person " + row.person_id + " in two groups");
    }
    it->second.set |= AccessMask{1} << unit->second;
  }
  for (std::string_view id : person_order) {
    const Person& person = people.at(id);
    counts.add(person.group, person.set, 1);
  }
  return counts;
}

ObservationTable union_observations_from_exact(const ExactSetCounts& counts) {
  const std::size_t m = counts.unit_count();
  check_unit_count(m);
  const std::size_t n = mask_count(m);
  const AccessMask all = full_mask(m);

  ObservationTable obs;
  obs.unit_ids = counts.unit_ids();
  obs.group_axis = counts.group_axis();
  obs.groups = counts.groups();
  obs.reach.reserve(obs.groups.size());
  for (std::size_t g = 0; g < obs.groups.size(); ++g) {
    // inside[X] = people whose access set lies within X.
    std::vector<std::int64_t> inside(n, 0);
    for (const auto& [set, count] : counts.counts(g)) inside[set] += count;
    subset_sum(inside, m);
    const std::int64_t total = inside[all];
    std::vector<std::int64_t> reach(n, 0);
    for (std::size_t t = 1; t < n; ++t) reach[t] = total - inside[all & ~static_cast<AccessMask>(t)];
    obs.reach.push_back(std::move(reach));
  }
  return obs;
}

void check_observations(const ObservationTable& obs) {
  const std::size_t m = obs.unit_ids.size();
  check_unit_count(m);
  const std::size_t n = mask_count(m);
  if (obs.reach.size() != obs.groups.size()) {
    throw ValidationError("incomplete observation table: group count mismatch");
  }
  for (std::size_t g = 0; g < obs.groups.size(); ++g) {
    const auto& reach = obs.reach[g];
    if (reach.size() != n) {
      throw ValidationError("incomplete observation table for group '" + obs.groups[g] + "'");
    }
    if (reach[0] != 0) {
      throw ValidationError("reach of the empty set must be 0 for group '" + obs.groups[g] + "'");
    }
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t bit = 0; bit < m; ++bit) {
        const std::size_t step = std::size_t{1} << bit;
        if (t & step) continue;
        if (reach[t] > reach[t | step]) {
          const AccessMask offending = static_cast<AccessMask>(t == 0 ? step : t);
          throw ValidationError("non-monotone observations for group '" + obs.groups[g] +
                                "': reach of " + format_access_set(offending, obs.unit_ids) +
                                " exceeds reach of " +
                                format_access_set(static_cast<AccessMask>(t | step), obs.unit_ids));
        }
      }
    }
  }
}

ExactSetCounts exact_counts_from_union_observations(const ObservationTable& obs) {
  check_observations(obs);
  const std::size_t m = obs.unit_ids.size();
  const std::size_t n = mask_count(m);
  const AccessMask all = full_mask(m);

  ExactSetCounts counts(obs.unit_ids, obs.group_axis);
  for (std::size_t g = 0; g < obs.groups.size(); ++g) {
    const auto& reach = obs.reach[g];
    counts.add_group(obs.groups[g]);
    std::vector<std::int64_t> exact(n, 0);
    for (std::size_t x = 1; x < n; ++x) exact[x] = reach[all] - reach[all & ~static_cast<AccessMask>(x)];
    moebius(exact, m);
    for (std::size_t a = 1; a < n; ++a) {
      if (exact[a] < 0) {
        throw ValidationError("inconsistent observations for group '" + obs.groups[g] +
                              "': implied count of " +
                              format_access_set(static_cast<AccessMask>(a), obs.unit_ids) + " is " +
                              std::to_string(exact[a]));
      }
      if (exact[a] > 0) counts.add(obs.groups[g], static_cast<AccessMask>(a), exact[a]);
    }
  }
  return counts;
}

PersonhoodTable personhoods(const ExactSetCounts& counts) {
  const std::size_t m = counts.unit_count();
  PersonhoodTable table;
  table.unit_ids = counts.unit_ids();
  table.group_axis = counts.group_axis();
  table.groups = counts.groups();
  table.unit_totals.assign(m, 0.0);

  for (std::size_t g = 0; g < table.groups.size(); ++g) {
    // by_size[i][k] = people of access-set size k + 1 that include unit i.
    std::vector<std::vector<std::int64_t>> by_size(m, std::vector<std::int64_t>(m, 0));
    std::int64_t people = 0;
    for (const auto& [set, count] : counts.counts(g)) {
      const int k = std::popcount(set);
      for (std::size_t i = 0; i < m; ++i) {
        if (set & (AccessMask{1} << i)) by_size[i][k - 1] += count;
      }
      people += count;
    }
    std::vector<double> mass(m, 0.0);
    double conserved = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        if (by_size[i][k] != 0) mass[i] += static_cast<double>(by_size[i][k]) / static_cast<double>(k + 1);
      }
      conserved += mass[i];
      table.unit_totals[i] += mass[i];
    }
    if (std::abs(conserved - static_cast<double>(people)) >
        1e-9 * std::max(1.0, static_cast<double>(people))) {
      throw InvariantError("personhood not conserved for group '" + table.groups[g] + "'");
    }
    table.mass.push_back(std::move(mass));
    table.people.push_back(people);
    table.population += people;
  }
  return table;
}

}  // namespace infoseg
