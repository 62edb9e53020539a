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

#ifndef INFOSEG_PERSONHOOD_H_
#define INFOSEG_PERSONHOOD_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "infoseg/population.h"

namespace infoseg {

// One (person, group, unit) follow relation.
struct Membership {
  std::string person_id;
  std::string group_id;
  std::string unit_id;

  friend bool operator==(const Membership&, const Membership&) = default;
};

// Union-reach observations: reach[g][T] is the number of people in group g
// following at least one unit in T. Indexed by AccessMask over all 2^m masks;
// reach[g][0] is always 0.
struct ObservationTable {
  std::vector<std::string> unit_ids;
  std::string group_axis;
  std::vector<std::string> groups;
  std::vector<std::vector<std::int64_t>> reach;

  friend bool operator==(const ObservationTable&, const ObservationTable&) = default;
};

// Tabulates the exact access set of every person. Groups are indexed in order
// of first appearance. Throws ValidationError if a person appears in two
// groups or a unit id is not in `unit_ids`.
ExactSetCounts exact_counts_from_memberships(std::span<const Membership> log,
                                             const std::vector<std::string>& unit_ids,
                                             std::string group_axis = {});

// Forward model: U(T) = sum of E(A) over access sets A meeting T.
ObservationTable union_observations_from_exact(const ExactSetCounts& counts);

// Throws ValidationError naming the first subset where reach decreases
// when a unit is added, or where the table is not complete.
void check_observations(const ObservationTable& obs);

// Recovers exact-set counts by Moebius inversion over the subset lattice.
// With F(X) = U(S) - U(S \ X), the number of people whose access set lies
// inside X, E(A) = sum over B in A of (-1)^|A \ B| F(B). Rejects
// inconsistent tables (non-monotone reach or any negative E) with the
// offending subset in the message.
ExactSetCounts exact_counts_from_union_observations(const ObservationTable& obs);

// a_i(g) = sum over access sets T containing i of E_g(T) / |T|.
PersonhoodTable personhoods(const ExactSetCounts& counts);

}  // namespace infoseg

#endif  // INFOSEG_PERSONHOOD_H_
