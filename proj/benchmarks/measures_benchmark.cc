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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "infoseg/measures.h"
#include "infoseg/population.h"
#include "infoseg/unit_space.h"

namespace infoseg {
namespace {

struct Instance {
  UnitSpace space;
  GroupDistribution a;
  GroupDistribution b;
  std::vector<double> totals;
};

Instance make_instance(std::size_t m) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  Instance in;
  for (std::size_t i = 0; i < m; ++i) {
    in.space.unit_ids.push_back("u" + std::to_string(i));
    in.space.positions.push_back({u(rng), u(rng)});
    in.space.topic_counts.push_back(1 + static_cast<std::int64_t>(u(rng)));
  }
  in.space = validate_unit_space(in.space);
  in.space.center_order = order_by_distance_from(in.space, 0);
  in.a.group_id = "a";
  in.b.group_id = "b";
  for (std::size_t i = 0; i < m; ++i) {
    in.a.mass.push_back(u(rng));
    in.b.mass.push_back(u(rng));
    in.a.total += in.a.mass.back();
    in.b.total += in.b.mass.back();
    in.totals.push_back(in.a.mass.back() + in.b.mass.back());
  }
  in.a.complement = in.b.total;
  in.b.complement = in.a.total;
  return in;
}

void BM_Evenness(benchmark::State& state) {
  const Instance in = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evenness(in.a));
}
BENCHMARK(BM_Evenness)->Range(8, 4096);

void BM_JointExposure(benchmark::State& state) {
  const Instance in = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(joint_exposure(in.a, in.b, in.totals));
}
BENCHMARK(BM_JointExposure)->Range(8, 4096);

void BM_Centralization(benchmark::State& state) {
  const Instance in = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(centralization_index(in.a, in.b, in.space));
}
BENCHMARK(BM_Centralization)->Range(8, 4096);

void BM_Clustering(benchmark::State& state) {
  const Instance in = make_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clustering_index(in.a, in.totals, in.space));
}
BENCHMARK(BM_Clustering)->Range(8, 512);

}  // namespace
}  // namespace infoseg
