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

#include <cmath>
#include <unordered_set>

#include "infoseg/errors.h"

namespace infoseg {
namespace {

constexpr double kSumTolerance = 1e-6;
// Weighted sums of a renormalized composition can overshoot +-1 by rounding.
constexpr double kScoreSlack = 1e-12;

}  // namespace

std::string_view political_unit_label(PoliticalUnit unit) {
  switch (unit) {
    case PoliticalUnit::kVeryConservative: return "VC";
    case PoliticalUnit::kConservative: return "C";
    case PoliticalUnit::kModerate: return "M";
    case PoliticalUnit::kLiberal: return "L";
    case PoliticalUnit::kVeryLiberal: return "VL";
  }
  return "?";
}

std::optional<PoliticalUnit> parse_political_unit(std::string_view label) {
  for (PoliticalUnit unit : kPoliticalUnits) {
    if (political_unit_label(unit) == label) return unit;
  }
  return std::nullopt;
}

AudienceComposition AudienceComposition::from_fractions(std::span<const double> fractions) {
  if (fractions.size() != 5) {
    throw ValidationError("audience composition needs 5 fractions, got " +
                          std::to_string(fractions.size()));
  }
  std::array<double, 5> f{};
  for (std::size_t k = 0; k < 5; ++k) {
    if (!(fractions[k] >= 0.0 && fractions[k] <= 1.0)) {
      throw ValidationError("audience fraction outside [0, 1]");
    }
    f[k] = fractions[k];
  }
  // Summed outside-in so mirrored compositions renormalize identically.
  const double sum = (f[0] + f[4]) + (f[1] + f[3]) + f[2];
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ValidationError("audience fractions sum to " + std::to_string(sum) + ", not 1");
  }
  for (double& x : f) x /= sum;
  return AudienceComposition(f);
}

void LeaningThresholds::validate() const {
  if (!(-1.0 <= vc_c && vc_c <= c_m && c_m <= m_l && m_l <= l_vl && l_vl <= 1.0)) {
    throw ValidationError("leaning thresholds must be ordered within [-1, 1]");
  }
}

LeaningScore::LeaningScore(double value) : value_(value) {
  if (!(value >= -1.0 && value <= 1.0)) {
    throw ValidationError("leaning score " + std::to_string(value) + " outside [-1, 1]");
  }
}

LeaningScore leaning_score(const AudienceComposition& composition, const LeaningWeights& weights) {
  const auto& w = weights.weights;
  const auto& f = composition.fractions();
  for (double x : w) {
    if (!(x >= -1.0 && x <= 1.0)) throw ValidationError("leaning weights must lie in [-1, 1]");
  }
  // Outer pair, inner pair, center: mirroring the audience negates each
  // partial sum exactly under symmetric weights.
  double score = (w[0] * f[0] + w[4] * f[4]) + (w[1] * f[1] + w[3] * f[3]) + w[2] * f[2];
  if (score > 1.0 && score <= 1.0 + kScoreSlack) score = 1.0;
  if (score < -1.0 && score >= -1.0 - kScoreSlack) score = -1.0;
  return LeaningScore(score);
}

PoliticalUnit classify_leaning(LeaningScore score, const LeaningThresholds& thresholds) {
  thresholds.validate();
  const double s = score.value();
  if (s < thresholds.vc_c) return PoliticalUnit::kVeryConservative;
  if (s < thresholds.c_m) return PoliticalUnit::kConservative;
  if (s <= thresholds.m_l) return PoliticalUnit::kModerate;
  if (s <= thresholds.l_vl) return PoliticalUnit::kLiberal;
  return PoliticalUnit::kVeryLiberal;
}

std::vector<SourceAssignment> map_sources(std::span<const SourceComposition> sources,
                                          const LeaningThresholds& thresholds,
                                          const LeaningWeights& weights) {
  thresholds.validate();
  std::unordered_set<std::string_view> seen;
  std::vector<SourceAssignment> out;
  out.reserve(sources.size());
  for (const auto& source : sources) {
    if (!seen.insert(source.source_id).second) {
      throw ValidationError("duplicate source id '" + source.source_id + "'");
    }
    const LeaningScore score = leaning_score(source.composition, weights);
    out.push_back({source.source_id, score.value(), classify_leaning(score, thresholds)});
  }
  return out;
}

}  // namespace infoseg
