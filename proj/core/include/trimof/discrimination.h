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

#ifndef TRIMOF_DISCRIMINATION_H_
#define TRIMOF_DISCRIMINATION_H_

#include <cstddef>
#include <string>
#include <vector>

#include "trimof/patterns.h"
#include "trimof/tensor.h"

namespace trimof {

struct DiscriminationConfig {
  // Lift a rule must exceed before it counts as discriminative.
  double desired_lift = 1.2;
  // Weights of normalized lift and standard-lift shortfall. Rescaled to sum
  // to one by Normalized().
  double w_d1 = 0.5;
  double w_d2 = 0.5;

  // Throws kInvalidConfig unless desired_lift > 1 and the weights are
  // non-negative with a positive sum.
  DiscriminationConfig Normalized() const;
};

// Contingency counts of the association rule pattern -> outcome.
struct RuleStats {
  std::size_t pattern_count = 0;
  std::size_t outcome_count = 0;
  std::size_t rule_count = 0;
  std::size_t n = 0;
  std::string outcome;
};

// rule / pattern. Throws kUndefinedRule when the pattern never occurs.
double Confidence(const RuleStats& r);
// rule / (pattern * outcome) * n. Throws kUndefinedRule on a zero marginal.
double Lift(const RuleStats& r);
// Lift rescaled between its marginal-constrained minimum and maximum, computed
// in exact count arithmetic:
//   (rule - max(pattern + outcome - n, 1)) /
//   (min(pattern, outcome) - max(pattern + outcome - n, 1)),
// clamped to [0, 1]; 1 when both bounds coincide.
double StandardLift(const RuleStats& r);
// desired / lift when lift > desired, otherwise 1.
double NormalizedLift(double lift, double desired);

struct DpcResult {
  double value = 1.0;
  double lift = 0.0;
  double standard_lift = 0.0;
  double normalized_lift = 1.0;
  RuleStats rule;
};

// Discriminative power component for the outcome the pattern lifts most
// (ties go to the lexicographically smallest symbol):
//   w_d1 * normalized_lift + w_d2 * (1 - standard_lift).
// Lower is better. Throws kMissingLabels without labels and kUndefinedRule
// when no observation carries the pattern.
DpcResult Dpc(const Dataset& dataset, const TriclusterPattern& pattern,
              const DiscriminationConfig& config = {});

// Labels recoded as indices into their sorted alphabet, with per-outcome
// counts. Lets hot loops skip string comparisons.
struct EncodedLabels {
  std::vector<std::string> alphabet;
  std::vector<std::size_t> codes;
  std::vector<std::size_t> counts;
};
EncodedLabels EncodeLabels(const std::vector<std::string>& labels);

// Same computation from precomputed matches: `matches` lists the observations
// carrying the pattern.
DpcResult DpcFromMatches(const EncodedLabels& labels,
                         const std::vector<std::size_t>& matches,
                         const DiscriminationConfig& config = {});

}  // namespace trimof

#endif  // TRIMOF_DISCRIMINATION_H_
