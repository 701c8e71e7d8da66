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

#include <cmath>

#include "trimof/significance.h"

namespace trimof {
namespace {

void BM_LogBinomialTail(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double log_p = std::log(0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(LogBinomialTail(log_p, n, n / 4));
  }
}
BENCHMARK(BM_LogBinomialTail)->RangeMultiplier(10)->Range(10, 100000);

}  // namespace
}  // namespace trimof
