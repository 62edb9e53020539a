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

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "infoseg/errors.h"
#include "testing/random_instances.h"

namespace infoseg {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

UnitSpace line(std::vector<std::string> ids, std::vector<double> xs) {
  UnitSpace space;
  space.unit_ids = std::move(ids);
  for (double x : xs) space.positions.push_back({x});
  return space;
}

TEST(UnitSpaceTest, DerivesDistancesOnALine) {
  const UnitSpace space = validate_unit_space(line({"a", "b"}, {0.0, 1.0}));
  EXPECT_THAT(space.distances, ElementsAre(ElementsAre(0.0, 1.0), ElementsAre(1.0, 0.0)));
  EXPECT_THAT(space.topic_counts, ElementsAre(0, 0));
}

TEST(UnitSpaceTest, PoliticalLineEndpointsAreTwoApart) {
  const UnitSpace space =
      validate_unit_space(line({"VC", "C", "M", "L", "VL"}, {-1.0, -0.5, 0.0, 0.5, 1.0}));
  EXPECT_DOUBLE_EQ(space.distances[0][4], 2.0);
}

TEST(UnitSpaceTest, RejectsAsymmetricDistances) {
  UnitSpace space;
  space.unit_ids = {"a", "b"};
  space.distances = {{0.0, 1.0}, {2.0, 0.0}};
  try {
    validate_unit_space(space);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_THAT(e.what(), HasSubstr("asymmetric"));
  }
}

TEST(UnitSpaceTest, RejectsNonzeroDiagonal) {
  UnitSpace space;
  space.unit_ids = {"a", "b"};
  space.distances = {{0.5, 1.0}, {1.0, 0.0}};
  EXPECT_THROW(validate_unit_space(space), ValidationError);
}

TEST(UnitSpaceTest, RejectsDistancesThatDisagreeWithPositions) {
  UnitSpace space = line({"a", "b"}, {0.0, 1.0});
  space.distances = {{0.0, 1.5}, {1.5, 0.0}};
  EXPECT_THROW(validate_unit_space(space), ValidationError);
  space.distances = {{0.0, 1.0 + 1e-12}, {1.0 + 1e-12, 0.0}};
  EXPECT_NO_THROW(validate_unit_space(space));
}

TEST(UnitSpaceTest, RejectsBadCenterOrder) {
  UnitSpace space = line({"a", "b", "c"}, {0.0, 1.0, 2.0});
  space.center_order = {0, 1, 1};
  EXPECT_THROW(validate_unit_space(space), ValidationError);
  space.center_order = {2, 0};
  EXPECT_THROW(validate_unit_space(space), ValidationError);
  space.center_order = {2, 0, 1};
  EXPECT_NO_THROW(validate_unit_space(space));
}

TEST(UnitSpaceTest, RejectsDuplicateIdsAndEmptySpaces) {
  EXPECT_THROW(validate_unit_space(line({"a", "a"}, {0.0, 1.0})), ValidationError);
  EXPECT_THROW(validate_unit_space(UnitSpace{}), ValidationError);
}

TEST(UnitSpaceTest, CenterOrderBreaksTiesById) {
  const UnitSpace space = political_line_space();
  const auto order = order_by_distance_from(space, 2);
  std::vector<std::string> ids;
  for (auto i : order) ids.push_back(space.unit_ids[i]);
  EXPECT_THAT(ids, ElementsAre("M", "C", "L", "VC", "VL"));
  EXPECT_EQ(space.center_order, order);
}

TEST(UnitSpaceTest, ValidationIsIdempotent) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    UnitSpace raw;
    const std::size_t m = testing::uniform_index(rng, 1, 8);
    raw.unit_ids = testing::unit_names(m);
    for (std::size_t i = 0; i < m; ++i) {
      raw.positions.push_back({testing::uniform_real(rng, -3, 3), testing::uniform_real(rng, -3, 3)});
    }
    const UnitSpace once = validate_unit_space(raw);
    const UnitSpace twice = validate_unit_space(once);
    EXPECT_EQ(once.distances, twice.distances);
    EXPECT_EQ(once, twice);
  }
}

}  // namespace
}  // namespace infoseg
