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

#include "trimof/mof.h"

namespace trimof {
namespace {

// Full recalibration at the default sample size; the argument is the thread
// count.
void BM_RecalibrateThreshold(benchmark::State& state) {
  MofConfig config;
  config.mode = MofMode::kAdditive;
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RecalibrateThreshold(1e-3, config, threads));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(config.sample_size));
}
BENCHMARK(BM_RecalibrateThreshold)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MofScore(benchmark::State& state) {
  MofConfig config;
  config.mode = MofMode::kAdditive;
  double dpc = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MofScore(0.01, dpc, 0.004, config));
    dpc = dpc < 0.9 ? dpc + 1e-3 : 0.3;
  }
}
BENCHMARK(BM_MofScore);

}  // namespace
}  // namespace trimof
