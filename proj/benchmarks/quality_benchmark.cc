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

#include <numeric>
#include <vector>

#include "trimof/quality.h"
#include "trimof/synthetic.h"

namespace trimof {
namespace {

std::vector<std::size_t> Prefix(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Scoring the whole planted tensor at growing sizes.
void BM_Msr(benchmark::State& state) {
  PlantSpec spec;
  spec.n = static_cast<std::size_t>(state.range(0));
  spec.m = 8;
  spec.p = 60;
  const Dataset d = Generate(spec).dataset;
  const Tricluster t{Prefix(spec.n), Prefix(spec.m), Prefix(spec.p)};
  for (auto _ : state) benchmark::DoNotOptimize(Msr(d, t));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(d.size()));
}
BENCHMARK(BM_Msr)->RangeMultiplier(4)->Range(16, 1024);

void BM_MsrContributions(benchmark::State& state) {
  const Dataset d = Generate(PlantSpec{}).dataset;
  const Tricluster t{Prefix(50), Prefix(8), Prefix(60)};
  for (auto _ : state) benchmark::DoNotOptimize(MsrContributions(d, t));
}
BENCHMARK(BM_MsrContributions);

void BM_Lsl(benchmark::State& state) {
  const Dataset d = Generate(PlantSpec{}).dataset;
  const Tricluster t{Prefix(15), Prefix(4), Prefix(20)};
  for (auto _ : state) benchmark::DoNotOptimize(Lsl(d, t));
}
BENCHMARK(BM_Lsl);

}  // namespace
}  // namespace trimof
