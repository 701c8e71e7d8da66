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

#include "trimof/search_trigen.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "parallel.h"
#include "trimof/config_io.h"
#include "trimof/error.h"
#include "trimof/evaluation.h"

namespace trimof {
namespace {

std::vector<std::size_t>& Dimension(Tricluster& t, int d) {
  return d == 0 ? t.observations : d == 1 ? t.variables : t.contexts;
}

const std::vector<std::size_t>& Dimension(const Tricluster& t, int d) {
  return d == 0 ? t.observations : d == 1 ? t.variables : t.contexts;
}

std::array<std::size_t, 3> Extent(const Dataset& dataset) {
  return {dataset.num_observations(), dataset.num_variables(),
          dataset.num_contexts()};
}

void CheckExtent(const Dataset& dataset, const TrigenConfig& config) {
  const auto extent = Extent(dataset);
  for (int d = 0; d < 3; ++d) {
    if (extent[d] < config.min_dims[d]) {
      throw Error(ErrorKind::kDatasetTooSmall,
                  "dataset is smaller than min_dims");
    }
  }
}

std::size_t UniformIndex(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double Unit(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

std::vector<std::size_t> RandomSubset(std::size_t universe, std::size_t size,
                                      std::mt19937_64& rng) {
  std::vector<std::size_t> all(universe);
  std::iota(all.begin(), all.end(), 0);
  // Partial Fisher-Yates: the first `size` slots become the sample.
  for (std::size_t s = 0; s < size; ++s) {
    std::swap(all[s], all[UniformIndex(s, universe - 1, rng)]);
  }
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

void Flip(std::vector<std::size_t>& dim, std::size_t index) {
  const auto where = std::lower_bound(dim.begin(), dim.end(), index);
  if (where != dim.end() && *where == index) {
    dim.erase(where);
  } else {
    dim.insert(where, index);
  }
}

void Repair(Tricluster& t, const TrigenConfig& config,
            const std::array<std::size_t, 3>& extent, std::mt19937_64& rng) {
  for (int d = 0; d < 3; ++d) {
    auto& dim = Dimension(t, d);
    while (dim.size() < config.min_dims[d]) {
      const std::size_t index = UniformIndex(0, extent[d] - 1, rng);
      const auto where = std::lower_bound(dim.begin(), dim.end(), index);
      if (where == dim.end() || *where != index) dim.insert(where, index);
    }
  }
}

std::size_t Tournament(const std::vector<Individual>& population,
                       std::size_t size, std::mt19937_64& rng) {
  std::size_t best = UniformIndex(0, population.size() - 1, rng);
  for (std::size_t round = 1; round < size; ++round) {
    const std::size_t other = UniformIndex(0, population.size() - 1, rng);
    if (population[other].fitness < population[best].fitness ||
        (population[other].fitness == population[best].fitness &&
         other < best)) {
      best = other;
    }
  }
  return best;
}

void CheckProbability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::kInvalidConfig,
                std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void TrigenConfig::Validate() const {
  if (n_triclusters == 0) {
    throw Error(ErrorKind::kInvalidConfig, "n_triclusters must be positive");
  }
  if (population_size < 2) {
    throw Error(ErrorKind::kInvalidConfig, "population_size must be >= 2");
  }
  if (generations == 0 || tournament_size == 0) {
    throw Error(ErrorKind::kInvalidConfig,
                "generations and tournament_size must be positive");
  }
  CheckProbability(crossover_prob, "crossover_prob");
  CheckProbability(mutation_prob, "mutation_prob");
  CheckProbability(elite_fraction, "elite_fraction");
  if (!(overlap_penalty_weight >= 0.0) || !(volume_weight >= 0.0)) {
    throw Error(ErrorKind::kInvalidConfig, "weights must be non-negative");
  }
  for (std::size_t d : min_dims) {
    if (d == 0) {
      throw Error(ErrorKind::kInvalidConfig, "min_dims must be positive");
    }
  }
  objective.Validate();
}

std::size_t TrigenFitness::Hash::operator()(const Tricluster& t) const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t value) {
    hash ^= value;
    hash *= 0x100000001b3ULL;
  };
  for (int d = 0; d < 3; ++d) {
    const auto& dim = Dimension(t, d);
    mix(dim.size());
    for (std::size_t index : dim) mix(index);
  }
  return static_cast<std::size_t>(hash);
}

TrigenFitness::TrigenFitness(const Dataset& dataset, const TrigenConfig& config)
    : dataset_(&dataset),
      config_(&config),
      objective_(dataset, config.objective),
      covered_(dataset.size(), false) {
  const auto extent = Extent(dataset);
  Tricluster whole;
  for (int d = 0; d < 3; ++d) {
    Dimension(whole, d).resize(extent[d]);
    std::iota(Dimension(whole, d).begin(), Dimension(whole, d).end(), 0);
  }
  try {
    whole_score_ = objective_.Evaluate(whole).score;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateProfile) throw;
  }
}

double TrigenFitness::CoveredFraction(const Tricluster& t) const {
  if (!any_covered_) return 0.0;
  std::size_t count = 0;
  for (std::size_t i : t.observations) {
    for (std::size_t j : t.variables) {
      for (std::size_t k : t.contexts) {
        if (covered_[dataset_->Offset(i, j, k)]) ++count;
      }
    }
  }
  return static_cast<double>(count) / static_cast<double>(t.volume());
}

double TrigenFitness::Compute(const Tricluster& t) const {
  double score;
  try {
    score = objective_.Evaluate(t).score;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateProfile) throw;
    return std::numeric_limits<double>::infinity();
  }
  const auto extent = Extent(*dataset_);
  double unused = 0.0;
  for (int d = 0; d < 3; ++d) {
    unused += 1.0 - static_cast<double>(Dimension(t, d).size()) /
                        static_cast<double>(extent[d]);
  }
  return score + config_->overlap_penalty_weight * CoveredFraction(t) +
         config_->volume_weight * whole_score_ * unused / 3.0;
}

double TrigenFitness::Evaluate(const Tricluster& t) {
  const auto found = cache_.find(t);
  if (found != cache_.end()) return found->second;
  const double value = Compute(t);
  cache_.emplace(t, value);
  return value;
}

void TrigenFitness::EvaluateAll(std::vector<Individual>& population) {
  std::vector<const Tricluster*> misses;
  std::unordered_map<Tricluster, double, Hash> pending;
  for (const auto& individual : population) {
    if (cache_.count(individual.tricluster) == 0 &&
        pending.emplace(individual.tricluster, 0.0).second) {
      misses.push_back(&individual.tricluster);
    }
  }
  std::vector<double> values(misses.size());
  internal::ParallelFor(misses.size(), config_->threads,
                        [&](std::size_t m) { values[m] = Compute(*misses[m]); });
  for (std::size_t m = 0; m < misses.size(); ++m) {
    cache_.emplace(*misses[m], values[m]);
  }
  for (auto& individual : population) {
    individual.fitness = cache_.at(individual.tricluster);
  }
}

void TrigenFitness::Cover(const Tricluster& t) {
  for (std::size_t i : t.observations) {
    for (std::size_t j : t.variables) {
      for (std::size_t k : t.contexts) {
        covered_[dataset_->Offset(i, j, k)] = true;
      }
    }
  }
  any_covered_ = true;
  cache_.clear();
}

std::vector<Individual> InitialPopulation(const Dataset& dataset,
                                          const TrigenConfig& config,
                                          std::mt19937_64& rng) {
  CheckExtent(dataset, config);
  const auto extent = Extent(dataset);
  auto size_in = [&](int d) {
    return UniformIndex(config.min_dims[d],
                        std::max(config.min_dims[d], extent[d] / 2), rng);
  };
  std::vector<Individual> population(config.population_size);
  for (auto& individual : population) {
    Tricluster& t = individual.tricluster;
    t.observations = RandomSubset(extent[0], size_in(0), rng);
    t.variables = RandomSubset(extent[1], size_in(1), rng);
    const std::size_t length = size_in(2);
    const std::size_t start = UniformIndex(0, extent[2] - length, rng);
    t.contexts.resize(length);
    std::iota(t.contexts.begin(), t.contexts.end(), start);
  }
  return population;
}

std::vector<Individual> EvolveGeneration(
    const std::vector<Individual>& population, TrigenFitness& fitness,
    const TrigenConfig& config, std::mt19937_64& rng) {
  const std::size_t size = population.size();
  const std::array<std::size_t, 3> extent = {
      fitness.dataset().num_observations(), fitness.dataset().num_variables(),
      fitness.dataset().num_contexts()};

  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return population[a].fitness < population[b].fitness;
                   });
  std::size_t elites = static_cast<std::size_t>(
      std::llround(config.elite_fraction * static_cast<double>(size)));
  if (config.elite_fraction > 0.0) elites = std::max<std::size_t>(elites, 1);
  elites = std::min(elites, size);

  std::vector<Individual> next;
  next.reserve(size);
  for (std::size_t e = 0; e < elites; ++e) next.push_back(population[order[e]]);

  while (next.size() < size) {
    const std::size_t a = Tournament(population, config.tournament_size, rng);
    const std::size_t b = Tournament(population, config.tournament_size, rng);
    Individual child{population[a].tricluster};
    if (Unit(rng) < config.crossover_prob) {
      for (int d = 0; d < 3; ++d) {
        if (Unit(rng) < 0.5) {
          Dimension(child.tricluster, d) =
              Dimension(population[b].tricluster, d);
        }
      }
    }
    if (Unit(rng) < config.mutation_prob) {
      const int d = static_cast<int>(UniformIndex(0, 2, rng));
      Flip(Dimension(child.tricluster, d), UniformIndex(0, extent[d] - 1, rng));
    }
    Repair(child.tricluster, config, extent, rng);
    next.push_back(std::move(child));
  }
  fitness.EvaluateAll(next);
  return next;
}

Solution RunTrigen(const Dataset& dataset, const TrigenConfig& config,
                   const TrigenObserver& observer) {
  config.Validate();
  CheckExtent(dataset, config);
  TrigenFitness fitness(dataset, config);

  Solution solution;
  solution.meta.algo = "trigen";
  solution.meta.pqc = config.objective.pqc;
  solution.meta.mof_mode = config.objective.mof.mode;
  solution.meta.seed = config.seed;
  solution.meta.config_hash = Fnv1aHex(TrigenConfigToJson(config, false));

  auto best_of = [](const std::vector<Individual>& population) {
    return std::min_element(population.begin(), population.end(),
                            [](const Individual& a, const Individual& b) {
                              return a.fitness < b.fitness;
                            });
  };

  for (std::size_t round = 0; round < config.n_triclusters; ++round) {
    // Each round draws from its own stream so that, without an overlap
    // penalty, round r does not depend on what earlier rounds found.
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                      static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(round)};
    std::mt19937_64 rng(seq);
    std::vector<Individual> population =
        InitialPopulation(dataset, config, rng);
    fitness.EvaluateAll(population);
    if (observer) observer(round, 0, best_of(population)->fitness);
    for (std::size_t g = 1; g <= config.generations; ++g) {
      population = EvolveGeneration(population, fitness, config, rng);
      if (observer) observer(round, g, best_of(population)->fitness);
    }
    const Tricluster best = best_of(population)->tricluster;
    fitness.Cover(best);
    solution.triclusters.push_back(
        ScoreTricluster(dataset, best, config.objective));
  }
  return solution;
}

}  // namespace trimof
