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

#ifndef TRIMOF_SOLUTION_H_
#define TRIMOF_SOLUTION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trimof/evaluation.h"
#include "trimof/mof.h"
#include "trimof/quality.h"
#include "trimof/tensor.h"

namespace trimof {

struct SolutionMeta {
  std::string algo;
  QualityMeasure pqc = QualityMeasure::kMsr;
  MofMode mof_mode = MofMode::kOriginal;
  std::uint64_t seed = 0;
  // Hash of the resolved search configuration (thread count excluded).
  std::string config_hash;
  // User and effective thresholds of threshold-driven searches.
  std::optional<double> delta;
  std::optional<double> delta_effective;

  // Flat string view used by reports.
  std::map<std::string, std::string> Flatten() const;
};

struct Solution {
  SolutionMeta meta;
  std::vector<ScoredTricluster> triclusters;
};

// Serializes with dataset ids for I, J and K. Numbers are written in their
// shortest round-trip form, so a reloaded solution compares equal.
std::string SolutionToJson(const Dataset& dataset, const Solution& solution);
// Throws kParseError on malformed JSON and kInvalidTricluster on ids that
// are not in `dataset`.
Solution SolutionFromJson(const Dataset& dataset, std::string_view text);

// Metadata and per-tricluster metric rows read without a dataset.
struct SolutionMetrics {
  std::map<std::string, std::string> meta;
  std::vector<MetricRow> rows;
};
SolutionMetrics ReadSolutionMetrics(std::string_view text);

// Throws kEmptySolution for a solution without triclusters.
SolutionSummary SummarizeSolution(const Solution& solution);

// 64-bit FNV-1a of `text`, as 16 lowercase hex digits.
std::string Fnv1aHex(std::string_view text);

}  // namespace trimof

#endif  // TRIMOF_SOLUTION_H_
