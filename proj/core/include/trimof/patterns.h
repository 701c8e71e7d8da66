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

#ifndef TRIMOF_PATTERNS_H_
#define TRIMOF_PATTERNS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "trimof/tensor.h"

namespace trimof {

// Default coherence half-width, in scaled value units, used to decide whether
// an observation carries a pattern.
inline constexpr double kDefaultPatternRadius = 0.05;

// Subspace (I, J, K) of a dataset. Index sets are kept sorted and unique.
struct Tricluster {
  std::vector<std::size_t> observations;
  std::vector<std::size_t> variables;
  std::vector<std::size_t> contexts;

  // Sorts and deduplicates the three index sets.
  static Tricluster Normalized(std::vector<std::size_t> observations,
                               std::vector<std::size_t> variables,
                               std::vector<std::size_t> contexts);

  std::size_t volume() const {
    return observations.size() * variables.size() * contexts.size();
  }
  bool Contains(std::size_t i, std::size_t j, std::size_t k) const;

  friend bool operator==(const Tricluster&, const Tricluster&) = default;
  friend auto operator<=>(const Tricluster&, const Tricluster&) = default;
};

// Throws kInvalidTricluster when a dimension is empty, unsorted, holds
// duplicates or indexes outside `dataset`.
void ValidateTricluster(const Dataset& dataset, const Tricluster& t);

// Expected value per (variable, context) cell of a tricluster. Expectations
// are stored row-major over variables x contexts.
struct TriclusterPattern {
  std::vector<std::size_t> variables;
  std::vector<std::size_t> contexts;
  std::vector<double> expectations;
  double radius = kDefaultPatternRadius;

  double expectation(std::size_t jj, std::size_t kk) const {
    return expectations[jj * contexts.size() + kk];
  }
  std::size_t num_cells() const { return expectations.size(); }
};

// c_jk = mean over I of a_ijk.
TriclusterPattern PatternOf(const Dataset& dataset, const Tricluster& t,
                            double radius = kDefaultPatternRadius);

// True when every cell of observation i lies within the pattern radius.
bool MatchesPattern(const Dataset& dataset, const TriclusterPattern& pattern,
                    std::size_t i);
// Indices of all observations (over the whole dataset) carrying the pattern.
std::vector<std::size_t> MatchingObservations(const Dataset& dataset,
                                              const TriclusterPattern& pattern);

std::size_t PatternCoverage(const Dataset& dataset,
                            const TriclusterPattern& pattern);
// Throws kMissingLabels without labels, kUnknownOutcome for an outcome that
// never occurs.
std::size_t OutcomeCoverage(const std::vector<std::string>& labels,
                            std::string_view outcome);
std::size_t RuleCoverage(const Dataset& dataset,
                         const TriclusterPattern& pattern,
                         std::string_view outcome);

// Sorted distinct label symbols.
std::vector<std::string> OutcomeAlphabet(const std::vector<std::string>& labels);

// `{"I":[...],"J":[...],"K":[...]}` using axis ids.
std::string TriclusterToJson(const Dataset& dataset, const Tricluster& t);
Tricluster TriclusterFromJson(const Dataset& dataset, std::string_view json);

}  // namespace trimof

#endif  // TRIMOF_PATTERNS_H_
