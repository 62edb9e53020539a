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

#ifndef INFOSEG_SYNTHGEN_H_
#define INFOSEG_SYNTHGEN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "infoseg/personhood.h"

namespace infoseg {

// One synthetic group. `preferences` holds a nonnegative weight per unit;
// `follow_counts[k - 1]` is the relative probability that a person follows
// exactly k units (empty means everyone follows one unit). Preferences are
// sharpened as weight_i = pref_i^selectivity; units with zero preference stay
// unreachable for every selectivity.
struct GroupProfile {
  std::string group_id;
  std::int64_t size = 0;
  std::vector<double> preferences;
  std::vector<double> follow_counts;
  double selectivity = 1.0;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::vector<std::string> unit_ids;
  std::vector<GroupProfile> groups;
};

// Throws ValidationError on an unusable config, including a follow count
// with positive probability that exceeds the number of reachable units.
void validate_generator_config(const GeneratorConfig& config);

// Draws a membership log. Person n (counting across groups in config order)
// is named "p<n>" and uses its own std::mt19937_64 stream seeded with
// splitmix64(seed + n); it draws a follow count k, then k distinct units by
// sequential weighted draws with renormalization. Uniform doubles are built
// from the top 53 bits of each 64-bit output, so the log depends only on the
// engine, which the standard fixes bit for bit.
std::vector<Membership> generate(const GeneratorConfig& config);

}  // namespace infoseg

#endif  // INFOSEG_SYNTHGEN_H_
