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

#ifndef INFOSEG_POPULATION_H_
#define INFOSEG_POPULATION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infoseg {

// Bit i set <=> unit i is in the set.
using AccessMask = std::uint32_t;

// Subset enumeration costs 2^m, so unit spaces are capped here.
inline constexpr std::size_t kMaxUnits = 20;

inline AccessMask full_mask(std::size_t unit_count) {
  return unit_count >= 32 ? ~AccessMask{0}
                          : static_cast<AccessMask>((std::uint64_t{1} << unit_count) - 1);
}

// Renders a mask as "{u1,u3}" using the given unit ids.
std::string format_access_set(AccessMask set, const std::vector<std::string>& unit_ids);

// For each group, the number of people whose access set is exactly T.
// Zero counts are never stored, so two instances describing the same
// population compare equal.
class ExactSetCounts {
 public:
  ExactSetCounts() = default;
  explicit ExactSetCounts(std::vector<std::string> unit_ids, std::string group_axis = {});

  const std::vector<std::string>& unit_ids() const { return unit_ids_; }
  std::size_t unit_count() const { return unit_ids_.size(); }
  const std::string& group_axis() const { return group_axis_; }
  const std::vector<std::string>& groups() const { return groups_; }

  // Registers the group if new and returns its index.
  std::size_t add_group(std::string_view group_id);
  std::optional<std::size_t> group_index(std::string_view group_id) const;

  // Adds `count` people with access set `set` to `group_id`. Throws
  // ValidationError on an empty or out-of-range set or a negative count.
  void add(std::string_view group_id, AccessMask set, std::int64_t count);

  const std::map<AccessMask, std::int64_t>& counts(std::size_t group) const {
    return counts_.at(group);
  }
  std::int64_t count(std::size_t group, AccessMask set) const;
  std::int64_t group_population(std::size_t group) const;

  friend bool operator==(const ExactSetCounts&, const ExactSetCounts&) = default;

 private:
  std::vector<std::string> unit_ids_;
  std::string group_axis_;
  std::vector<std::string> groups_;
  std::vector<std::map<AccessMask, std::int64_t>> counts_;
};

// Fractional personhood mass per group and unit. `people[g]` is the head
// count of group g; `unit_totals[i]` sums mass[g][i] over groups;
// `population` sums people over groups.
struct PersonhoodTable {
  std::vector<std::string> unit_ids;
  std::string group_axis;
  std::vector<std::string> groups;
  std::vector<std::vector<double>> mass;
  std::vector<std::int64_t> people;
  std::vector<double> unit_totals;
  std::int64_t population = 0;

  std::optional<std::size_t> group_index(std::string_view group_id) const;

  friend bool operator==(const PersonhoodTable&, const PersonhoodTable&) = default;
};

// Checks shapes, nonnegativity, per-group conservation and unit totals.
void validate_personhood_table(const PersonhoodTable& table);

// One group's personhood vector. `complement` is the number of people outside
// the group.
struct GroupDistribution {
  std::string group_id;
  std::vector<double> mass;
  double total = 0.0;
  double complement = 0.0;
};

// Projects group `group_id` out of `table`. The complement is taken relative
// to the loaded population unless `population_override` supplies an external
// universe size, which must be at least the group's size.
GroupDistribution group_distribution(const PersonhoodTable& table, std::string_view group_id,
                                     std::optional<double> population_override = std::nullopt);

// The whole loaded population viewed as a single group.
GroupDistribution population_distribution(const PersonhoodTable& table);

}  // namespace infoseg

#endif  // INFOSEG_POPULATION_H_
