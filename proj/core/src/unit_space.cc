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

#include "infoseg/unit_space.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "infoseg/errors.h"

namespace infoseg {
namespace {

constexpr double kPositionTolerance = 1e-9;
constexpr double kSymmetryTolerance = 1e-12;

double euclidean(const std::vector<double>& x, const std::vector<double>& y) {
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

std::int64_t UnitSpace::topic_total() const {
  return std::accumulate(topic_counts.begin(), topic_counts.end(), std::int64_t{0});
}

std::optional<std::size_t> UnitSpace::index_of(std::string_view unit_id) const {
  auto it = std::find(unit_ids.begin(), unit_ids.end(), unit_id);
  if (it == unit_ids.end()) return std::nullopt;
  return static_cast<std::size_t>(it - unit_ids.begin());
}

UnitSpace validate_unit_space(UnitSpace space) {
  const std::size_t m = space.size();
  if (m == 0) throw ValidationError("unit space has no units");

  std::set<std::string_view> seen;
  for (const auto& id : space.unit_ids) {
    if (id.empty()) throw ValidationError("empty unit id");
    if (!seen.insert(id).second) throw ValidationError("duplicate unit id '" + id + "'");
  }

  if (space.has_positions()) {
    if (space.positions.size() != m) {
      throw ValidationError("expected " + std::to_string(m) + " positions, got " +
                            std::to_string(space.positions.size()));
    }
    const std::size_t dim = space.positions.front().size();
    if (dim == 0) throw ValidationError("positions must have at least one coordinate");
    for (std::size_t i = 0; i < m; ++i) {
      if (space.positions[i].size() != dim) {
        throw ValidationError("position of unit '" + space.unit_ids[i] +
                              "' has inconsistent dimension");
      }
      for (double x : space.positions[i]) {
        if (!std::isfinite(x)) {
          throw ValidationError("position of unit '" + space.unit_ids[i] + "' is not finite");
        }
      }
    }
  }

  if (space.has_distances()) {
    if (space.distances.size() != m) throw ValidationError("distance matrix must be m x m");
    for (std::size_t i = 0; i < m; ++i) {
      if (space.distances[i].size() != m) throw ValidationError("distance matrix must be m x m");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (space.distances[i][i] != 0.0) {
        throw ValidationError("nonzero diagonal distance at unit '" + space.unit_ids[i] + "'");
      }
      for (std::size_t j = 0; j < m; ++j) {
        const double d = space.distances[i][j];
        if (!std::isfinite(d) || d < 0.0) {
          throw ValidationError("negative or non-finite distance between '" +
                                space.unit_ids[i] + "' and '" + space.unit_ids[j] + "'");
        }
        if (std::abs(d - space.distances[j][i]) > kSymmetryTolerance) {
          throw ValidationError("asymmetric distances between '" + space.unit_ids[i] +
                                "' and '" + space.unit_ids[j] + "'");
        }
      }
    }
    if (space.has_positions()) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const double expected = euclidean(space.positions[i], space.positions[j]);
          if (std::abs(space.distances[i][j] - expected) > kPositionTolerance) {
            throw ValidationError("distance between '" + space.unit_ids[i] + "' and '" +
                                  space.unit_ids[j] + "' does not match positions");
          }
        }
      }
    }
  } else if (space.has_positions()) {
    space.distances.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double d = euclidean(space.positions[i], space.positions[j]);
        space.distances[i][j] = d;
        space.distances[j][i] = d;
      }
    }
  }

  if (space.topic_counts.empty()) {
    space.topic_counts.assign(m, 0);
  } else if (space.topic_counts.size() != m) {
    throw ValidationError("expected " + std::to_string(m) + " topic counts, got " +
                          std::to_string(space.topic_counts.size()));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (space.topic_counts[i] < 0) {
      throw ValidationError("negative topic count at unit '" + space.unit_ids[i] + "'");
    }
  }

  if (space.has_center_order()) {
    std::vector<std::size_t> sorted = space.center_order;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == m;
    for (std::size_t i = 0; permutation && i < m; ++i) permutation = sorted[i] == i;
    if (!permutation) throw ValidationError("center_order is not a permutation of the units");
  }
  return space;
}

std::vector<std::size_t> order_by_distance_from(const UnitSpace& space, std::size_t center) {
  if (!space.has_distances()) {
    throw ValidationError("center ordering needs positions or distances");
  }
  if (center >= space.size()) throw ValidationError("center unit out of range");
  std::vector<std::size_t> order(space.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& row = space.distances[center];
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (row[x] != row[y]) return row[x] < row[y];
    return space.unit_ids[x] < space.unit_ids[y];
  });
  return order;
}

UnitSpace political_line_space() {
  UnitSpace space;
  space.unit_ids = {"VC", "C", "M", "L", "VL"};
  space.positions = {{-1.0}, {-0.5}, {0.0}, {0.5}, {1.0}};
  space.topic_counts = {1, 1, 1, 1, 1};
  space = validate_unit_space(std::move(space));
  space.center_order = order_by_distance_from(space, 2);
  return space;
}

}  // namespace infoseg
