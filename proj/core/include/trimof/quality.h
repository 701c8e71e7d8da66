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

#ifndef TRIMOF_QUALITY_H_
#define TRIMOF_QUALITY_H_

#include <string_view>
#include <vector>

#include "trimof/patterns.h"
#include "trimof/tensor.h"

namespace trimof {

// Pattern quality components. Lower is better for all three.
enum class QualityMeasure { kMsr, kLsl, kMsl };

std::string_view QualityMeasureName(QualityMeasure measure);
// Accepts "msr", "lsl" or "msl"; throws kInvalidConfig otherwise.
QualityMeasure ParseQualityMeasure(std::string_view name);

// Mean squared residue against the three-way additive model
//   a_ijk ~ a_iJK + a_IjK + a_IJk - 2 a_IJK.
// Throws kEmptyTricluster when a dimension is empty.
double Msr(const Dataset& dataset, const Tricluster& t);

// Mean squared residue restricted to each slice of the tricluster, i.e. the
// contribution of every observation, variable and context to the score.
struct MsrBreakdown {
  double score = 0.0;
  std::vector<double> observations;
  std::vector<double> variables;
  std::vector<double> contexts;
};
MsrBreakdown MsrContributions(const Dataset& dataset, const Tricluster& t);

// Least-squares-lines dissimilarity averaged over the three views
// {I,J,K}, {I,K,J}, {K,I,J}: each profile gets a least-squares slope, slopes
// become angles via arctan, and a view scores the mean absolute pairwise angle
// difference divided by pi. Throws kDegenerateProfile for profiles with fewer
// than two points.
double Lsl(const Dataset& dataset, const Tricluster& t);

// Multi-slope dissimilarity: like Lsl but compares the angle of every
// consecutive segment, averaging the per-segment pairwise differences.
double Msl(const Dataset& dataset, const Tricluster& t);

double EvaluatePqc(QualityMeasure measure, const Dataset& dataset,
                   const Tricluster& t);

}  // namespace trimof

#endif  // TRIMOF_QUALITY_H_
