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

#ifndef TRIMOF_SYNTHETIC_H_
#define TRIMOF_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "trimof/patterns.h"
#include "trimof/tensor.h"

namespace trimof {

enum class Coherence { kConstant, kAdditive };
enum class Background { kUniform, kAdditive };

std::string_view CoherenceName(Coherence coherence);
Coherence ParseCoherence(std::string_view name);
std::string_view BackgroundName(Background background);
Background ParseBackground(std::string_view name);

// A tensor with one planted tricluster and a labelled outcome per
// observation.
struct PlantSpec {
  std::size_t n = 50, m = 8, p = 60;
  std::size_t block_i = 15, block_j = 4, block_k = 20;
  Coherence coherence = Coherence::kConstant;
  // Value of a constant block, or the base level of an additive one.
  double block_value = 0.9;
  // Standard deviation of the Gaussian noise on planted cells, truncated to
  // keep values in [0, 1].
  double noise_sigma = 0.0;
  // Probability that a planted observation carries the target outcome.
  double label_association = 1.0;
  std::size_t num_outcomes = 4;
  Background background = Background::kUniform;
  std::uint64_t seed = 0;

  // Throws kInvalidSpec on empty or oversized blocks, probabilities outside
  // [0, 1], fewer than two outcomes or a block value outside [0, 1].
  void Validate() const;
};

struct PlantedDataset {
  Dataset dataset;
  Tricluster truth;
  std::string target;
};

// Planted observations and variables are random subsets and the planted
// contexts a random contiguous window. Observations outside the block are
// labelled uniformly over the non-target outcomes. The first outcome name,
// "walk", is the target. Deterministic given the seed.
PlantedDataset Generate(const PlantSpec& spec);

// Cell-level Jaccard index |A n B| / |A u B| of two triclusters.
double CellJaccard(const Tricluster& a, const Tricluster& b);

}  // namespace trimof

#endif  // TRIMOF_SYNTHETIC_H_
