// Copyright 2026 The trimof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "trimof/search_trigen.h"
#include "trimof/search_trimax.h"
#include "trimof/synthetic.h"

namespace trimof {
namespace {

PlantedDataset Planted() {
  PlantSpec spec;
  spec.noise_sigma = 0.01;
  spec.label_association = 0.9;
  spec.seed = 1;
  return Generate(spec);
}

void BM_Trimax(benchmark::State& state) {
  const PlantedDataset planted = Planted();
  TrimaxConfig config;
  config.objective.mof.mode = static_cast<MofMode>(state.range(0));
  config.objective.mof.sample_size = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(RunTrimax(planted.dataset, config));
}
BENCHMARK(BM_Trimax)
    ->Arg(static_cast<int>(MofMode::kOriginal))
    ->Arg(static_cast<int>(MofMode::kAdditive))
    ->Unit(benchmark::kMillisecond);

void BM_TrigenOneTricluster(benchmark::State& state) {
  const PlantedDataset planted = Planted();
  TrigenConfig config;
  config.n_triclusters = 1;
  config.generations = 50;
  config.objective.mof.mode = static_cast<MofMode>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(RunTrigen(planted.dataset, config));
}
BENCHMARK(BM_TrigenOneTricluster)
    ->Arg(static_cast<int>(MofMode::kOriginal))
    ->Arg(static_cast<int>(MofMode::kAdditive))
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace trimof
