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

#ifndef TRIMOF_SEARCH_TRIMAX_H_
#define TRIMOF_SEARCH_TRIMAX_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "trimof/objective.h"
#include "trimof/solution.h"
#include "trimof/tensor.h"

namespace trimof {

struct TrimaxConfig {
  // User threshold on the objective. Replaced by the recalibrated threshold
  // when the objective uses a MOF composition.
  double delta = 1e-3;
  // Multiple deletion removes elements contributing more than lambda times
  // the current score.
  double lambda = 1.2;
  std::size_t max_triclusters = 20;
  // Minimum |I|, |J|, |K|.
  std::array<std::size_t, 3> min_dims = {2, 2, 2};
  // Seeds the masking values and the recalibration sample.
  std::uint64_t seed = 0;
  ObjectiveConfig objective;
  // Worker threads for the recalibration sample. Results do not depend on it.
  unsigned threads = 1;

  // Throws kInvalidConfig unless delta > 0, lambda > 1, max_triclusters >= 1
  // and every min_dims entry is positive.
  void Validate() const;
};

enum class TrimaxPhase { kMultipleDeletion, kSingleDeletion, kAddition };

// Called after every accepted step of a round with the score it reached.
using TrimaxObserver =
    std::function<void(std::size_t round, TrimaxPhase phase, double score)>;

// Greedy top-down search. Each round starts from the whole tensor, removes
// elements until the objective drops to the threshold, then adds back any
// element that keeps it there. Cells of every emitted tricluster are masked
// with uniform noise before the next round. Stops after max_triclusters,
// when a round cannot reach the threshold, or when a round only rediscovers
// cells that are already covered.
//
// Throws kDatasetTooSmall when a tensor dimension is below min_dims.
Solution RunTrimax(const Dataset& dataset, const TrimaxConfig& config,
                   const TrimaxObserver& observer = {});

}  // namespace trimof

#endif  // TRIMOF_SEARCH_TRIMAX_H_
