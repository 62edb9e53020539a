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

#ifndef INFOSEG_LEANING_H_
#define INFOSEG_LEANING_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace infoseg {

enum class PoliticalUnit {
  kVeryConservative,
  kConservative,
  kModerate,
  kLiberal,
  kVeryLiberal,
};

inline constexpr std::array<PoliticalUnit, 5> kPoliticalUnits = {
    PoliticalUnit::kVeryConservative, PoliticalUnit::kConservative, PoliticalUnit::kModerate,
    PoliticalUnit::kLiberal, PoliticalUnit::kVeryLiberal};

// "VC", "C", "M", "L", "VL".
std::string_view political_unit_label(PoliticalUnit unit);
std::optional<PoliticalUnit> parse_political_unit(std::string_view label);

// Audience fractions per leaning, ordered VC, C, M, L, VL.
class AudienceComposition {
 public:
  // Each fraction must lie in [0, 1] and the sum within 1e-6 of 1; the result
  // is renormalized to sum exactly 1. Throws ValidationError otherwise.
  static AudienceComposition from_fractions(std::span<const double> fractions);

  const std::array<double, 5>& fractions() const { return fractions_; }
  double fraction(PoliticalUnit unit) const { return fractions_[static_cast<int>(unit)]; }

 private:
  explicit AudienceComposition(const std::array<double, 5>& f) : fractions_(f) {}
  std::array<double, 5> fractions_;
};

// Leaning weight attached to each audience bucket.
struct LeaningWeights {
  std::array<double, 5> weights = {-1.0, -0.5, 0.0, 0.5, 1.0};
};

// Cut points between adjacent units. VC: s < vc_c; C: vc_c <= s < c_m;
// M: c_m <= s <= m_l; L: m_l < s <= l_vl; VL: s > l_vl.
struct LeaningThresholds {
  double vc_c = -0.5;
  double c_m = -0.1;
  double m_l = 0.1;
  double l_vl = 0.5;

  // Throws ValidationError unless -1 <= vc_c <= c_m <= m_l <= l_vl <= 1.
  void validate() const;
};

// A source's leaning on [-1, 1].
class LeaningScore {
 public:
  // Throws ValidationError outside [-1, 1].
  explicit LeaningScore(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// Audience-weighted leaning: sum_k w_k f_k.
LeaningScore leaning_score(const AudienceComposition& composition,
                           const LeaningWeights& weights = {});

PoliticalUnit classify_leaning(LeaningScore score, const LeaningThresholds& thresholds = {});

struct SourceComposition {
  std::string source_id;
  AudienceComposition composition;
};

struct SourceAssignment {
  std::string source_id;
  double score = 0.0;
  PoliticalUnit unit = PoliticalUnit::kModerate;
};

// Scores and classifies every source, preserving input order. Throws
// ValidationError on a duplicate source id.
std::vector<SourceAssignment> map_sources(std::span<const SourceComposition> sources,
                                          const LeaningThresholds& thresholds = {},
                                          const LeaningWeights& weights = {});

}  // namespace infoseg

#endif  // INFOSEG_LEANING_H_
