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

#ifndef INFOSEG_UNIT_SPACE_H_
#define INFOSEG_UNIT_SPACE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infoseg {

// The m information units a population can access, embedded in a topic
// space. Positions are optional; distances are derived from them when not
// given explicitly. `center_order` lists unit indices sorted ascending by
// distance from a designated center and is required only by centralization.
struct UnitSpace {
  std::vector<std::string> unit_ids;
  std::vector<std::vector<double>> positions;  // empty, or one vector per unit
  std::vector<std::vector<double>> distances;  // empty, or m x m
  std::vector<std::int64_t> topic_counts;      // one per unit
  std::vector<std::size_t> center_order;       // empty, or a permutation of [0, m)

  std::size_t size() const { return unit_ids.size(); }
  bool has_positions() const { return !positions.empty(); }
  bool has_distances() const { return !distances.empty(); }
  bool has_center_order() const { return !center_order.empty(); }
  std::int64_t topic_total() const;
  std::optional<std::size_t> index_of(std::string_view unit_id) const;

  friend bool operator==(const UnitSpace&, const UnitSpace&) = default;
};

// Checks every structural invariant and fills in Euclidean distances when only
// positions are present. Missing topic counts become zeros. Throws
// ValidationError naming the first violation.
UnitSpace validate_unit_space(UnitSpace space);

// Unit indices sorted by (distance from `center`, unit id). Requires
// distances.
std::vector<std::size_t> order_by_distance_from(const UnitSpace& space,
                                                std::size_t center);

// The five political buckets VC, C, M, L, VL on a line at -1, -0.5, 0, 0.5, 1,
// with center M and one topic per unit.
UnitSpace political_line_space();

}  // namespace infoseg

#endif  // INFOSEG_UNIT_SPACE_H_
