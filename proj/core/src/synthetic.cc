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

#include "trimof/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "trimof/error.h"

namespace trimof {
namespace {

constexpr const char* kOutcomeNames[] = {"walk", "run", "sit", "stand"};

std::string OutcomeName(std::size_t index) {
  if (index < std::size(kOutcomeNames)) return kOutcomeNames[index];
  return "outcome" + std::to_string(index);
}

std::vector<std::size_t> RandomSubset(std::size_t universe, std::size_t size,
                                      std::mt19937_64& rng) {
  std::vector<std::size_t> all(universe);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t IntersectionSize(const std::vector<std::size_t>& a,
                             const std::vector<std::size_t>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

std::string_view CoherenceName(Coherence coherence) {
  return coherence == Coherence::kConstant ? "constant" : "additive";
}

Coherence ParseCoherence(std::string_view name) {
  if (name == "constant") return Coherence::kConstant;
  if (name == "additive") return Coherence::kAdditive;
  throw Error(ErrorKind::kInvalidSpec,
              "unknown coherence '" + std::string(name) + "'");
}

std::string_view BackgroundName(Background background) {
  return background == Background::kUniform ? "uniform" : "additive";
}

Background ParseBackground(std::string_view name) {
  if (name == "uniform") return Background::kUniform;
  if (name == "additive") return Background::kAdditive;
  throw Error(ErrorKind::kInvalidSpec,
              "unknown background '" + std::string(name) + "'");
}

void PlantSpec::Validate() const {
  if (n == 0 || m == 0 || p == 0) {
    throw Error(ErrorKind::kInvalidSpec, "tensor dimensions must be positive");
  }
  if (block_i == 0 || block_j == 0 || block_k == 0) {
    throw Error(ErrorKind::kInvalidSpec, "block dimensions must be positive");
  }
  if (block_i > n || block_j > m || block_k > p) {
    throw Error(ErrorKind::kInvalidSpec,
                "block dimensions exceed the tensor dimensions");
  }
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
    throw Error(ErrorKind::kInvalidSpec, "noise_sigma must be non-negative");
  }
  if (!(label_association >= 0.0 && label_association <= 1.0)) {
    throw Error(ErrorKind::kInvalidSpec,
                "label_association must lie in [0, 1]");
  }
  if (!(block_value >= 0.0 && block_value <= 1.0)) {
    throw Error(ErrorKind::kInvalidSpec, "block_value must lie in [0, 1]");
  }
  if (num_outcomes < 2) {
    throw Error(ErrorKind::kInvalidSpec, "at least two outcomes are needed");
  }
}

PlantedDataset Generate(const PlantSpec& spec) {
  spec.Validate();
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  PlantedDataset out;
  out.truth.observations = RandomSubset(spec.n, spec.block_i, rng);
  out.truth.variables = RandomSubset(spec.m, spec.block_j, rng);
  const std::size_t start =
      std::uniform_int_distribution<std::size_t>(0, spec.p - spec.block_k)(rng);
  out.truth.contexts.resize(spec.block_k);
  std::iota(out.truth.contexts.begin(), out.truth.contexts.end(), start);

  std::vector<double> values(spec.n * spec.m * spec.p);
  auto offset = [&](std::size_t i, std::size_t j, std::size_t k) {
    return (i * spec.m + j) * spec.p + k;
  };

  if (spec.background == Background::kUniform) {
    for (double& v : values) v = unit(rng);
  } else {
    // Three effects of a third each keep the sum in [0, 1].
    std::uniform_real_distribution<double> third(0.0, 1.0 / 3.0);
    std::vector<double> a(spec.n), b(spec.m), c(spec.p);
    for (double& x : a) x = third(rng);
    for (double& x : b) x = third(rng);
    for (double& x : c) x = third(rng);
    for (std::size_t i = 0; i < spec.n; ++i) {
      for (std::size_t j = 0; j < spec.m; ++j) {
        for (std::size_t k = 0; k < spec.p; ++k) {
          values[offset(i, j, k)] = a[i] + b[j] + c[k];
        }
      }
    }
  }

  // Additive blocks shift the base by effects in [-0.1, 0.1] per dimension,
  // clipped by the distance of the base to the unit interval's edges.
  const double spread = spec.coherence == Coherence::kAdditive
                            ? std::min({0.1, spec.block_value / 3.0,
                                        (1.0 - spec.block_value) / 3.0})
                            : 0.0;
  std::uniform_real_distribution<double> effect(-spread, spread);
  std::vector<double> ea(spec.block_i), eb(spec.block_j), ec(spec.block_k);
  if (spec.coherence == Coherence::kAdditive) {
    for (double& x : ea) x = effect(rng);
    for (double& x : eb) x = effect(rng);
    for (double& x : ec) x = effect(rng);
  }
  std::normal_distribution<double> noise(0.0, spec.noise_sigma);
  for (std::size_t ii = 0; ii < spec.block_i; ++ii) {
    for (std::size_t jj = 0; jj < spec.block_j; ++jj) {
      for (std::size_t kk = 0; kk < spec.block_k; ++kk) {
        const double clean = spec.block_value + ea[ii] + eb[jj] + ec[kk];
        double value = clean;
        if (spec.noise_sigma > 0.0) {
          // Resample out-of-range draws; clamp only as a last resort.
          for (int attempt = 0; attempt < 64; ++attempt) {
            value = clean + noise(rng);
            if (value >= 0.0 && value <= 1.0) break;
          }
          value = std::clamp(value, 0.0, 1.0);
        }
        values[offset(out.truth.observations[ii], out.truth.variables[jj],
                      out.truth.contexts[kk])] = value;
      }
    }
  }

  out.target = OutcomeName(0);
  std::uniform_int_distribution<std::size_t> other(1, spec.num_outcomes - 1);
  std::vector<std::string> labels(spec.n);
  std::vector<bool> planted(spec.n, false);
  for (std::size_t i : out.truth.observations) planted[i] = true;
  for (std::size_t i = 0; i < spec.n; ++i) {
    const bool target = planted[i] && unit(rng) < spec.label_association;
    labels[i] = target ? out.target : OutcomeName(other(rng));
  }

  std::vector<std::string> observation_ids(spec.n);
  std::vector<std::string> variable_ids(spec.m);
  std::vector<std::string> context_ids(spec.p);
  for (std::size_t i = 0; i < spec.n; ++i) {
    observation_ids[i] = "obs" + std::to_string(i);
  }
  for (std::size_t j = 0; j < spec.m; ++j) {
    variable_ids[j] = "var" + std::to_string(j);
  }
  for (std::size_t k = 0; k < spec.p; ++k) context_ids[k] = std::to_string(k);
  out.dataset = Dataset(std::move(observation_ids), std::move(variable_ids),
                        std::move(context_ids), std::move(values))
                    .WithLabels(std::move(labels));
  return out;
}

double CellJaccard(const Tricluster& a, const Tricluster& b) {
  const double intersection =
      static_cast<double>(IntersectionSize(a.observations, b.observations)) *
      static_cast<double>(IntersectionSize(a.variables, b.variables)) *
      static_cast<double>(IntersectionSize(a.contexts, b.contexts));
  const double union_size = static_cast<double>(a.volume()) +
                            static_cast<double>(b.volume()) - intersection;
  return union_size > 0.0 ? intersection / union_size : 0.0;
}

}  // namespace trimof
