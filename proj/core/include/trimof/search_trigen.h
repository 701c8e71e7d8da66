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

#ifndef TRIMOF_SEARCH_TRIGEN_H_
#define TRIMOF_SEARCH_TRIGEN_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <unordered_map>
#include <vector>

#include "trimof/objective.h"
#include "trimof/patterns.h"
#include "trimof/solution.h"
#include "trimof/tensor.h"

namespace trimof {

struct TrigenConfig {
  std::size_t n_triclusters = 20;
  std::size_t population_size = 100;
  std::size_t generations = 250;
  std::size_t tournament_size = 3;
  double crossover_prob = 0.8;
  double mutation_prob = 0.1;
  double elite_fraction = 0.1;
  // Weight of the fraction of a candidate's cells already covered by earlier
  // extractions.
  double overlap_penalty_weight = 0.5;
  // Weight of the mean unused share 1 - |D| / N_D over the three dimensions,
  // in units of the whole tensor's objective score. Without it every
  // coherence measure favours the smallest triclusters.
  double volume_weight = 0.5;
  std::array<std::size_t, 3> min_dims = {2, 2, 2};
  std::uint64_t seed = 0;
  ObjectiveConfig objective;
  // Fitness evaluation threads. Results do not depend on it.
  unsigned threads = 1;

  // Throws kInvalidConfig on probabilities outside [0, 1], a population below
  // two, zero triclusters, generations or tournament size, negative weights
  // or non-positive min_dims.
  void Validate() const;
};

struct Individual {
  Tricluster tricluster;
  double fitness = std::numeric_limits<double>::infinity();
};

// Fitness of candidates: objective score, plus overlap_penalty_weight times
// the covered share of the candidate's cells, plus volume_weight times the
// whole tensor's score times the mean unused share of the three dimensions.
// Evaluations are memoized; the cache is dropped whenever the covered cells
// change.
class TrigenFitness {
 public:
  TrigenFitness(const Dataset& dataset, const TrigenConfig& config);

  double Evaluate(const Tricluster& t);
  // Evaluates every individual of `population` whose fitness is unknown,
  // spreading cache misses over config.threads workers.
  void EvaluateAll(std::vector<Individual>& population);
  // Marks the cells of `t` as covered for later rounds.
  void Cover(const Tricluster& t);
  double CoveredFraction(const Tricluster& t) const;

  const Dataset& dataset() const { return *dataset_; }

 private:
  struct Hash {
    std::size_t operator()(const Tricluster& t) const;
  };
  double Compute(const Tricluster& t) const;

  const Dataset* dataset_;
  const TrigenConfig* config_;
  Objective objective_;
  std::vector<bool> covered_;
  bool any_covered_ = false;
  double whole_score_ = 0.0;
  std::unordered_map<Tricluster, double, Hash> cache_;
};

// Random individuals: a contiguous context window with length uniform in
// [min_K, max(min_K, p / 2)] and observation and variable subsets sized
// uniformly in [min, max(min, N / 2)]. Fitness is left unevaluated.
std::vector<Individual> InitialPopulation(const Dataset& dataset,
                                          const TrigenConfig& config,
                                          std::mt19937_64& rng);

// One generation: elites copied in fitness order, the rest bred from
// tournament-selected parents by per-dimension crossover, single-index flip
// mutation and min_dims repair. The returned population is evaluated.
std::vector<Individual> EvolveGeneration(const std::vector<Individual>& population,
                                         TrigenFitness& fitness,
                                         const TrigenConfig& config,
                                         std::mt19937_64& rng);

// Called once per generation with the best fitness of that generation.
using TrigenObserver = std::function<void(
    std::size_t round, std::size_t generation, double best_fitness)>;

// Extracts exactly n_triclusters triclusters, one evolutionary run each, each
// later run penalized for overlapping the earlier ones.
//
// Throws kDatasetTooSmall when a tensor dimension is below min_dims.
Solution RunTrigen(const Dataset& dataset, const TrigenConfig& config,
                   const TrigenObserver& observer = {});

}  // namespace trimof

#endif  // TRIMOF_SEARCH_TRIGEN_H_
