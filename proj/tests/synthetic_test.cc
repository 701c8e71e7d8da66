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

#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.h"
#include "trimof/discrimination.h"
#include "trimof/quality.h"

namespace trimof {
namespace {

TEST(Generate, NoiseFreeConstantBlockHasZeroResidue) {
  PlantSpec spec;
  spec.seed = 10;
  const PlantedDataset planted = Generate(spec);
  EXPECT_NEAR(Msr(planted.dataset, planted.truth), 0.0, 1e-20);
  EXPECT_EQ(planted.truth.observations.size(), 15u);
  EXPECT_EQ(planted.truth.variables.size(), 4u);
  EXPECT_EQ(planted.truth.contexts.size(), 20u);
  // Contexts form one contiguous window.
  EXPECT_EQ(planted.truth.contexts.back() - planted.truth.contexts.front(), 19u);
  for (double v : planted.dataset.values()) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(Generate, FullAssociationGivesClosedFormLift) {
  PlantSpec spec;
  spec.seed = 11;
  const PlantedDataset planted = Generate(spec);
  const auto& labels = planted.dataset.labels();
  for (std::size_t i : planted.truth.observations) EXPECT_EQ(labels[i], planted.target);
  const std::size_t target = std::count(labels.begin(), labels.end(), planted.target);
  EXPECT_EQ(target, spec.block_i);
  RuleStats r;
  r.n = spec.n;
  r.pattern_count = spec.block_i;
  r.outcome_count = target;
  r.rule_count = spec.block_i;
  EXPECT_DOUBLE_EQ(Confidence(r), 1.0);
  EXPECT_DOUBLE_EQ(Lift(r), static_cast<double>(spec.n) / static_cast<double>(target));
}

TEST(Generate, OtherRowsAvoidTheTarget) {
  PlantSpec spec;
  spec.seed = 12;
  const PlantedDataset planted = Generate(spec);
  const auto& labels = planted.dataset.labels();
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (std::binary_search(planted.truth.observations.begin(),
                           planted.truth.observations.end(), i)) {
      continue;
    }
    EXPECT_NE(labels[i], planted.target);
  }
  EXPECT_EQ(OutcomeAlphabet(labels),
            (std::vector<std::string>{"run", "sit", "stand", "walk"}));
}

TEST(Generate, SameSeedSameDataset) {
  PlantSpec spec;
  spec.noise_sigma = 0.05;
  spec.coherence = Coherence::kAdditive;
  spec.seed = 13;
  const PlantedDataset a = Generate(spec);
  const PlantedDataset b = Generate(spec);
  EXPECT_EQ(a.dataset, b.dataset);
  EXPECT_EQ(a.truth, b.truth);
  spec.seed = 14;
  EXPECT_FALSE(Generate(spec).dataset == a.dataset);
}

TEST(Generate, AdditiveBlockResidueBoundedByNoise) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    PlantSpec spec;
    spec.n = 20;
    spec.m = 5;
    spec.p = 20;
    spec.block_i = 8;
    spec.block_j = 3;
    spec.block_k = 8;
    spec.coherence = Coherence::kAdditive;
    spec.background = Background::kAdditive;
    spec.noise_sigma = 0.02;
    spec.seed = seed;
    const PlantedDataset planted = Generate(spec);
    EXPECT_LE(Msr(planted.dataset, planted.truth),
              3.0 * spec.noise_sigma * spec.noise_sigma + 1e-6)
        << seed;
  }
}

TEST(Generate, NoiseFreeAdditiveBlockIsExact) {
  PlantSpec spec;
  spec.coherence = Coherence::kAdditive;
  spec.seed = 15;
  const PlantedDataset planted = Generate(spec);
  EXPECT_NEAR(Msr(planted.dataset, planted.truth), 0.0, 1e-20);
}

TEST(Generate, InvalidSpecs) {
  PlantSpec spec;
  spec.block_i = 60;
  EXPECT_TRIMOF_ERROR(Generate(spec), ErrorKind::kInvalidSpec);
  spec = PlantSpec{};
  spec.block_k = 0;
  EXPECT_TRIMOF_ERROR(Generate(spec), ErrorKind::kInvalidSpec);
  spec = PlantSpec{};
  spec.label_association = 1.5;
  EXPECT_TRIMOF_ERROR(Generate(spec), ErrorKind::kInvalidSpec);
  spec = PlantSpec{};
  spec.num_outcomes = 1;
  EXPECT_TRIMOF_ERROR(Generate(spec), ErrorKind::kInvalidSpec);
  EXPECT_TRIMOF_ERROR(ParseCoherence("shifting"), ErrorKind::kInvalidSpec);
}

TEST(CellJaccard, Basics) {
  const Tricluster a{{0, 1}, {0, 1}, {0, 1}};
  const Tricluster b{{1, 2}, {0, 1}, {0, 1}};
  EXPECT_DOUBLE_EQ(CellJaccard(a, a), 1.0);
  EXPECT_DOUBLE_EQ(CellJaccard(a, b), 4.0 / 12.0);
  EXPECT_DOUBLE_EQ(CellJaccard(a, {{5}, {5}, {5}}), 0.0);
}

}  // namespace
}  // namespace trimof
