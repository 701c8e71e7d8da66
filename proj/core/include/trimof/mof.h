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

#ifndef TRIMOF_MOF_H_
#define TRIMOF_MOF_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trimof/significance.h"

namespace trimof {

enum class MofMode { kOriginal, kAdditive, kMultiplicative };

std::string_view MofModeName(MofMode mode);  // "none", "add", "mul"
// Accepts none|original, add|additive, mul|multiplicative.
MofMode ParseMofMode(std::string_view name);

struct MofConfig {
  MofMode mode = MofMode::kOriginal;
  std::array<double, 3> betas = {1.0, 1.0, 1.0};
  // Default 1/k with k = 3 components.
  std::array<double, 3> alphas = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  SignificanceConfig significance;
  // Monte-Carlo sample size m used by threshold recalibration.
  std::size_t sample_size = 100000;
  // 1-based order statistic taken as the recalibrated threshold; defaults to
  // ceil(m / 20), the 5% boundary of the lowest values.
  std::optional<std::size_t> percentile_rank;
  std::uint64_t seed = 0;

  std::size_t PercentileRank() const;
  // Throws kInvalidConfig on non-positive alphas, negative betas, an empty
  // sample or a rank outside [1, m].
  void Validate() const;
};

// Composite objective; lower is better.
//   additive:       b1 pqc^a1 + b2 (dpc pqc)^a2 + b3 (ssc pqc)^a3
//   multiplicative: pqc^a1 dpc^a2 ssc^a3
//   original:       pqc
// Throws kInvalidScore for negative or non-finite inputs.
double MofScore(double pqc, double dpc, double ssc, const MofConfig& config);

// m draws of MofScore with the pattern quality fixed at `pqc`, DPC ~ U(0,1)
// and a p-value drawn from U(0, theta) or U(theta, 1) with equal probability
// before the significance transform. Returned sorted ascending.
//
// The stream is split into fixed-size chunks, each seeded from (seed, chunk
// index), so the result does not depend on `threads`.
std::vector<double> SampleMofDistribution(double pqc, const MofConfig& config,
                                          unsigned threads = 1);

// The PercentileRank()-th smallest sampled MOF at pqc = delta_user: the
// threshold a top-down search should use in place of the user's pattern
// quality threshold. Throws kNoRecalibrationNeeded in original mode.
double RecalibrateThreshold(double delta_user, const MofConfig& config,
                            unsigned threads = 1);

}  // namespace trimof

#endif  // TRIMOF_MOF_H_
