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

#include "infoseg/leaning.h"

#include <array>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "infoseg/errors.h"
#include "testing/random_instances.h"

namespace infoseg {
namespace {

AudienceComposition comp(std::array<double, 5> f) { return AudienceComposition::from_fractions(f); }

TEST(LeaningScoreTest, Examples) {
  EXPECT_EQ(leaning_score(comp({0, 0, 1, 0, 0})).value(), 0.0);
  EXPECT_EQ(leaning_score(comp({1, 0, 0, 0, 0})).value(), -1.0);
  EXPECT_EQ(leaning_score(comp({0, 0, 0, 0, 1})).value(), 1.0);
  EXPECT_NEAR(leaning_score(comp({0.2, 0.2, 0.2, 0.2, 0.2})).value(), 0.0, 1e-15);
  // The conservative bucket carries its own -0.5 weight.
  EXPECT_DOUBLE_EQ(leaning_score(comp({0, 1, 0, 0, 0})).value(), -0.5);
}

TEST(LeaningScoreTest, RenormalizesSmallDrift) {
  const auto c = comp({0.5, 0, 0, 0, 0.5 + 5e-7});
  double sum = 0.0;
  for (double f : c.fractions()) sum += f;
  EXPECT_DOUBLE_EQ(sum, 1.0);
}

TEST(LeaningScoreTest, RejectsInvalidCompositions) {
  EXPECT_THROW(comp({0.5, 0, 0, 0, 0.6}), ValidationError);
  EXPECT_THROW(comp({-0.1, 0.1, 0, 0, 1.0}), ValidationError);
  EXPECT_THROW(AudienceComposition::from_fractions(std::array<double, 4>{0.25, 0.25, 0.25, 0.25}),
               ValidationError);
  EXPECT_THROW(LeaningScore(1.5), ValidationError);
}

TEST(LeaningScoreTest, MirroringNegatesExactly) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<double, 5> f{};
    double sum = 0.0;
    for (double& x : f) sum += (x = testing::uniform_real(rng, 0.0, 1.0));
    for (double& x : f) x /= sum;
    const std::array<double, 5> mirrored = {f[4], f[3], f[2], f[1], f[0]};
    const double s = leaning_score(comp(f)).value();
    EXPECT_EQ(leaning_score(comp(mirrored)).value(), -s);
    EXPECT_GE(s, -1.0);
    EXPECT_LE(s, 1.0);
  }
}

TEST(LeaningScoreTest, LinearInComposition) {
  const auto x = comp({0.1, 0.2, 0.3, 0.2, 0.2});
  const auto y = comp({0.4, 0.0, 0.1, 0.5, 0.0});
  std::array<double, 5> mix{};
  for (int k = 0; k < 5; ++k) mix[k] = 0.3 * x.fractions()[k] + 0.7 * y.fractions()[k];
  EXPECT_NEAR(leaning_score(comp(mix)).value(),
              0.3 * leaning_score(x).value() + 0.7 * leaning_score(y).value(), 1e-15);
}

TEST(ClassifyLeaningTest, BoundaryPolicy) {
  const double eps = 1e-9;
  auto label = [](double s) { return political_unit_label(classify_leaning(LeaningScore(s))); };
  EXPECT_EQ(label(0.0), "M");
  EXPECT_EQ(label(-0.5), "C");
  EXPECT_EQ(label(-0.5 - eps), "VC");
  EXPECT_EQ(label(-0.1), "M");
  EXPECT_EQ(label(-0.1 - eps), "C");
  EXPECT_EQ(label(0.1), "M");
  EXPECT_EQ(label(0.1 + eps), "L");
  EXPECT_EQ(label(0.5), "L");
  EXPECT_EQ(label(0.5 + eps), "VL");
  EXPECT_EQ(label(-1.0), "VC");
  EXPECT_EQ(label(1.0), "VL");
}

TEST(ClassifyLeaningTest, MonotoneAndTotal) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 2000; ++trial) {
    double s = testing::uniform_real(rng, -1.0, 1.0);
    double t = testing::uniform_real(rng, -1.0, 1.0);
    if (s > t) std::swap(s, t);
    EXPECT_LE(static_cast<int>(classify_leaning(LeaningScore(s))),
              static_cast<int>(classify_leaning(LeaningScore(t))));
  }
}

TEST(ClassifyLeaningTest, CustomThresholds) {
  const LeaningThresholds wide{-0.8, -0.3, 0.3, 0.8};
  EXPECT_EQ(classify_leaning(LeaningScore(0.25), wide), PoliticalUnit::kModerate);
  EXPECT_EQ(classify_leaning(LeaningScore(-0.6), wide), PoliticalUnit::kConservative);
  EXPECT_THROW(classify_leaning(LeaningScore(0.0), LeaningThresholds{0.5, 0.1, -0.1, -0.5}),
               ValidationError);
}

TEST(MapSourcesTest, Examples) {
  EXPECT_TRUE(map_sources({}).empty());

  const std::vector<SourceComposition> one = {{"s", comp({0, 0, 0, 0, 1})}};
  EXPECT_EQ(map_sources(one)[0].unit, PoliticalUnit::kVeryLiberal);

  const std::vector<SourceComposition> mirrored = {
      {"right", comp({0.5, 0.3, 0.1, 0.1, 0.0})},
      {"left", comp({0.0, 0.1, 0.1, 0.3, 0.5})},
      {"lean_right", comp({0.1, 0.3, 0.3, 0.2, 0.1})},
      {"lean_left", comp({0.1, 0.2, 0.3, 0.3, 0.1})}};
  const auto out = map_sources(mirrored);
  EXPECT_EQ(out[0].unit, PoliticalUnit::kVeryConservative);
  EXPECT_EQ(out[1].unit, PoliticalUnit::kVeryLiberal);
  EXPECT_EQ(out[2].score, -out[3].score);
  EXPECT_EQ(static_cast<int>(out[2].unit), 4 - static_cast<int>(out[3].unit));
  EXPECT_EQ(out[0].source_id, "right");
}

TEST(MapSourcesTest, RejectsDuplicateIds) {
  const std::vector<SourceComposition> dup = {{"s", comp({0, 0, 1, 0, 0})},
                                              {"s", comp({0, 0, 1, 0, 0})}};
  EXPECT_THROW(map_sources(dup), ValidationError);
}

}  // namespace
}  // namespace infoseg
