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

#include "infoseg/synthgen.h"

#include <cmath>
#include <algorithm>
#include <random>
#include <set>

#include "infoseg/errors.h"

namespace infoseg {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits.
double next_unit(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Index drawn with probability weights[i] / sum; weights has positive sum.
std::size_t draw(std::mt19937_64& engine, const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  const double target = next_unit(engine) * total;
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_positive = i;
    running += weights[i];
    if (target < running) return i;
  }
  return last_positive;
}

std::vector<double> sharpened(const GroupProfile& group) {
  const double peak = *std::max_element(group.preferences.begin(), group.preferences.end());
  std::vector<double> weights(group.preferences.size(), 0.0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (group.preferences[i] > 0.0) {
      weights[i] = std::pow(group.preferences[i] / peak, group.selectivity);
    }
  }
  return weights;
}

}  // namespace

void validate_generator_config(const GeneratorConfig& config) {
  const std::size_t m = config.unit_ids.size();
  if (m == 0) throw ValidationError("generator config needs at least one unit");
  std::set<std::string_view> units(config.unit_ids.begin(), config.unit_ids.end());
  if (units.size() != m) throw ValidationError("duplicate unit id in generator config");
  std::set<std::string_view> groups;
  for (const auto& group : config.groups) {
    const std::string where = "group '" + group.group_id + "': ";
    if (group.group_id.empty()) throw ValidationError("empty group id in generator config");
    if (!groups.insert(group.group_id).second) {
      throw ValidationError("duplicate group '" + group.group_id + "' in generator config");
    }
    if (group.size < 0) throw ValidationError(where + "negative size");
    if (group.preferences.size() != m) {
      throw ValidationError(where + "expected " + std::to_string(m) + " preferences");
    }
    if (!(group.selectivity >= 0.0) || !std::isfinite(group.selectivity)) {
      throw ValidationError(where + "selectivity must be a finite value >= 0");
    }
    std::size_t reachable = 0;
    for (double p : group.preferences) {
      if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError(where + "invalid preference");
      if (p > 0.0) ++reachable;
    }
    if (reachable == 0) throw ValidationError(where + "all preferences are zero");
    if (group.follow_counts.size() > m) {
      throw ValidationError(where + "follow counts support exceeds the number of units");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < group.follow_counts.size(); ++k) {
      const double p = group.follow_counts[k];
      if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError(where + "invalid follow count weight");
      total += p;
      if (p > 0.0 && k + 1 > reachable) {
        throw ValidationError(where + "follow count " + std::to_string(k + 1) + " exceeds the " +
                              std::to_string(reachable) + " units with positive weight");
      }
    }
    if (!group.follow_counts.empty() && !(total > 0.0)) {
      throw ValidationError(where + "follow count weights are all zero");
    }
  }
}

std::vector<Membership> generate(const GeneratorConfig& config) {
  validate_generator_config(config);
  std::vector<Membership> log;
  std::uint64_t person = 0;
  for (const auto& group : config.groups) {
    const std::vector<double> base = sharpened(group);
    const std::vector<double> follow =
        group.follow_counts.empty() ? std::vector<double>{1.0} : group.follow_counts;
    for (std::int64_t n = 0; n < group.size; ++n, ++person) {
      std::mt19937_64 engine(splitmix64(config.seed + person));
      const std::size_t k = draw(engine, follow) + 1;
      std::vector<double> weights = base;
      std::vector<std::size_t> chosen;
      chosen.reserve(k);
      for (std::size_t draw_index = 0; draw_index < k; ++draw_index) {
        if (std::none_of(weights.begin(), weights.end(), [](double w) { return w > 0.0; })) {
          throw ValidationError("group '" + group.group_id +
                                "': selectivity leaves fewer positive weights than the follow count");
        }
        const std::size_t unit = draw(engine, weights);
        weights[unit] = 0.0;
        chosen.push_back(unit);
      }
      std::sort(chosen.begin(), chosen.end());
      const std::string person_id = "p" + std::to_string(person);
      for (std::size_t unit : chosen) {
        log.push_back({person_id, group.group_id, config.unit_ids[unit]});
      }
    }
  }
  return log;
}

}  // namespace infoseg
