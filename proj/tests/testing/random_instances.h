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

// Seeded generators of random inputs for property tests.

#ifndef INFOSEG_TESTS_TESTING_RANDOM_INSTANCES_H_
#define INFOSEG_TESTS_TESTING_RANDOM_INSTANCES_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "infoseg/personhood.h"
#include "infoseg/population.h"
#include "infoseg/unit_space.h"

namespace infoseg::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::vector<std::string> unit_names(std::size_t m) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < m; ++i) ids.push_back("u" + std::to_string(i + 1));
  return ids;
}

// Up to `max_sets` distinct access sets per group, counts summing to at most
// roughly `max_people` per group.
inline ExactSetCounts random_exact_counts(Rng& rng, std::size_t m, std::size_t groups,
                                          std::int64_t max_people, std::size_t max_sets = 40) {
  ExactSetCounts counts(unit_names(m), "axis");
  const AccessMask all = full_mask(m);
  for (std::size_t g = 0; g < groups; ++g) {
    const std::string group = "g" + std::to_string(g + 1);
    counts.add_group(group);
    const std::size_t sets = uniform_index(rng, 1, max_sets);
    const std::int64_t per_set = std::max<std::int64_t>(1, max_people / static_cast<std::int64_t>(sets));
    for (std::size_t s = 0; s < sets; ++s) {
      const AccessMask set = static_cast<AccessMask>(uniform_index(rng, 1, all));
      counts.add(group, set, static_cast<std::int64_t>(uniform_index(rng, 0, per_set)));
    }
  }
  return counts;
}

inline std::vector<Membership> random_membership_log(Rng& rng, std::size_t m, std::size_t groups,
                                                     std::size_t max_people) {
  const auto units = unit_names(m);
  std::vector<Membership> log;
  const std::size_t people = uniform_index(rng, 0, max_people);
  for (std::size_t p = 0; p < people; ++p) {
    const std::string person = "p" + std::to_string(p);
    const std::string group = "g" + std::to_string(uniform_index(rng, 1, groups));
    const std::size_t follows = uniform_index(rng, 1, m);
    for (std::size_t f = 0; f < follows; ++f) {
      log.push_back({person, group, units[uniform_index(rng, 0, m - 1)]});
    }
  }
  std::shuffle(log.begin(), log.end(), rng);
  return log;
}

// Random personhood table over m units where every group has people.
inline PersonhoodTable random_table(Rng& rng, std::size_t m, std::size_t groups) {
  while (true) {
    const PersonhoodTable table = personhoods(random_exact_counts(rng, m, groups, 500, 12));
    bool all_populated = true;
    for (auto n : table.people) all_populated = all_populated && n > 0;
    if (all_populated) return table;
  }
}

// Random points in 1-3 dimensions, random topic counts with a positive
// total, ordered around a random center.
inline UnitSpace random_space(Rng& rng, std::size_t m) {
  UnitSpace space;
  space.unit_ids = unit_names(m);
  const std::size_t dim = uniform_index(rng, 1, 3);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> p(dim);
    for (double& x : p) x = uniform_real(rng, -2.0, 2.0);
    space.positions.push_back(std::move(p));
    space.topic_counts.push_back(static_cast<std::int64_t>(uniform_index(rng, 0, 9)));
  }
  space.topic_counts[uniform_index(rng, 0, m - 1)] += 1;
  space = validate_unit_space(std::move(space));
  space.center_order = order_by_distance_from(space, uniform_index(rng, 0, m - 1));
  return space;
}

}  // namespace infoseg::testing

#endif  // INFOSEG_TESTS_TESTING_RANDOM_INSTANCES_H_
