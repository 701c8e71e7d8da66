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

#ifndef TRIMOF_SIGNIFICANCE_H_
#define TRIMOF_SIGNIFICANCE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "trimof/patterns.h"
#include "trimof/tensor.h"

namespace trimof {

struct SignificanceConfig {
  // Significance threshold theta, 0 < theta < 1.
  double theta = 0.05;
  // Number of planned patterns for a Bonferroni-adjusted threshold.
  std::optional<std::size_t> bonferroni_n;

  // theta, or theta / bonferroni_n when an adjustment is configured.
  double EffectiveTheta() const;
  // Throws kInvalidConfig when theta or bonferroni_n is out of range.
  void Validate() const;
};

// Independent per-cell null model of a pattern. Each cell probability is the
// fraction of all observations whose value lies within the pattern radius of
// the cell expectation, clamped to [1/(n+1), n/(n+1)].
struct NullModel {
  std::vector<double> cell_probabilities;
  // Sum of log cell probabilities; kept in log space because patterns with
  // hundreds of cells underflow a plain product.
  double log_pattern_probability = 0.0;

  double pattern_probability() const;
};

NullModel PatternProbability(const Dataset& dataset,
                             const TriclusterPattern& pattern);

// P(X >= support) for X ~ Binomial(n, p), accumulated in log space.
// Throws kInvalidSupport when support > n.
double BinomialTail(double p, std::size_t n, std::size_t support);
// Natural log of the same tail probability, taking log(p) as input so that
// vanishing pattern probabilities keep full resolution. Returns -inf for an
// impossible event.
double LogBinomialTail(double log_p, std::size_t n, std::size_t support);

double Bonferroni(double theta, std::size_t n_patterns);

// Statistical significance component: 1 / |ln p| below theta, 1 otherwise.
// A p-value of zero is clamped to the smallest positive double first.
double Ssc(double p_value, double theta);
// Same transform fed with ln(p-value) directly.
double SscFromLog(double log_p_value, double theta);

}  // namespace trimof

#endif  // TRIMOF_SIGNIFICANCE_H_
