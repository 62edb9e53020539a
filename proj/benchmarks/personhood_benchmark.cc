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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "infoseg/personhood.h"
#include "infoseg/population.h"

namespace infoseg {
namespace {

ExactSetCounts make_counts(std::size_t m, std::size_t sets) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < m; ++i) ids.push_back("u" + std::to_string(i));
  ExactSetCounts counts(ids, "axis");
  counts.add_group("g");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<AccessMask> set(1, full_mask(m));
  std::uniform_int_distribution<std::int64_t> count(1, 1000);
  for (std::size_t s = 0; s < sets; ++s) counts.add("g", set(rng), count(rng));
  return counts;
}

void BM_UnionFromExact(benchmark::State& state) {
  const auto counts = make_counts(static_cast<std::size_t>(state.range(0)), 500);
  for (auto _ : state) benchmark::DoNotOptimize(union_observations_from_exact(counts));
}
BENCHMARK(BM_UnionFromExact)->DenseRange(4, 16, 4);

void BM_ExactFromUnion(benchmark::State& state) {
  const auto obs = union_observations_from_exact(make_counts(static_cast<std::size_t>(state.range(0)), 500));
  for (auto _ : state) benchmark::DoNotOptimize(exact_counts_from_union_observations(obs));
}
BENCHMARK(BM_ExactFromUnion)->DenseRange(4, 16, 4);

void BM_Personhoods(benchmark::State& state) {
  const auto counts = make_counts(static_cast<std::size_t>(state.range(0)), 2000);
  for (auto _ : state) benchmark::DoNotOptimize(personhoods(counts));
}
BENCHMARK(BM_Personhoods)->DenseRange(4, 16, 4);

void BM_MembershipTabulation(benchmark::State& state) {
  const std::vector<std::string> ids = {"VC", "C", "M", "L", "VL"};
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> unit(0, ids.size() - 1);
  std::vector<Membership> log;
  for (std::int64_t p = 0; p < state.range(0); ++p) {
    log.push_back({"p" + std::to_string(p), "g" + std::to_string(p % 4), ids[unit(rng)]});
    log.push_back({"p" + std::to_string(p), "g" + std::to_string(p % 4), ids[unit(rng)]});
  }
  for (auto _ : state) benchmark::DoNotOptimize(exact_counts_from_memberships(log, ids));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(log.size()));
}
BENCHMARK(BM_MembershipTabulation)->Range(1 << 10, 1 << 16);

}  // namespace
}  // namespace infoseg
