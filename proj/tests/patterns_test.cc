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

#include "trimof/patterns.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_util.h"
#include "trimof/synthetic.h"

namespace trimof {
namespace {

using testing::MakeDataset;
using testing::Range;

TEST(Tricluster, NormalizedSortsAndDeduplicates) {
  const Tricluster t = Tricluster::Normalized({3, 1, 3}, {2, 0}, {5});
  EXPECT_EQ(t.observations, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(t.variables, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(t.volume(), 4u);
  EXPECT_TRUE(t.Contains(3, 2, 5));
  EXPECT_FALSE(t.Contains(2, 2, 5));
}

TEST(Tricluster, ValidationRejectsBadSets) {
  const Dataset d = MakeDataset(3, 3, 3, [](auto, auto, auto) { return 0.0; });
  EXPECT_TRIMOF_ERROR(ValidateTricluster(d, {{}, {0}, {0}}),
                      ErrorKind::kInvalidTricluster);
  EXPECT_TRIMOF_ERROR(ValidateTricluster(d, {{0, 3}, {0}, {0}}),
                      ErrorKind::kInvalidTricluster);
  EXPECT_TRIMOF_ERROR(ValidateTricluster(d, {{1, 0}, {0}, {0}}),
                      ErrorKind::kInvalidTricluster);
  EXPECT_NO_THROW(ValidateTricluster(d, {{0, 2}, {1}, {0, 1, 2}}));
}

TEST(PatternOf, ConstantTricluster) {
  const Dataset d = MakeDataset(3, 2, 2, [](auto, auto, auto) { return 0.4; });
  const auto pattern = PatternOf(d, testing::Whole(d));
  ASSERT_EQ(pattern.num_cells(), 4u);
  for (double c : pattern.expectations) EXPECT_DOUBLE_EQ(c, 0.4);
}

TEST(PatternOf, MeanOverObservations) {
  const Dataset d = MakeDataset(2, 1, 1, [](auto i, auto, auto) {
    return i == 0 ? 0.2 : 0.6;
  });
  EXPECT_DOUBLE_EQ(PatternOf(d, testing::Whole(d)).expectation(0, 0), 0.4);
}

TEST(PatternOf, PlantedNoiseStaysNearPlantedValue) {
  std::size_t close = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PlantSpec spec;
    spec.noise_sigma = 0.01;
    spec.seed = seed;
    const PlantedDataset planted = Generate(spec);
    const auto pattern = PatternOf(planted.dataset, planted.truth);
    for (double c : pattern.expectations) {
      ++total;
      if (std::fabs(c - spec.block_value) <= 0.01) ++close;
    }
  }
  EXPECT_GE(static_cast<double>(close), 0.99 * static_cast<double>(total));
}

TEST(PatternCoverage, ExactPlantedBlock) {
  PlantSpec spec;
  spec.seed = 4;
  const PlantedDataset planted = Generate(spec);
  const auto pattern = PatternOf(planted.dataset, planted.truth, 0.0);
  EXPECT_EQ(PatternCoverage(planted.dataset, pattern),
            planted.truth.observations.size());
}

TEST(PatternCoverage, FullRangeRadiusMatchesEverything) {
  const Dataset d = MakeDataset(7, 2, 3, [](auto i, auto j, auto k) {
    return static_cast<double>((i * 5 + j * 3 + k) % 11) / 10.0;
  });
  const Tricluster t{{0, 1}, {0, 1}, {0, 1, 2}};
  EXPECT_EQ(PatternCoverage(d, PatternOf(d, t, 1.0)), 7u);
}

TEST(PatternCoverage, CountsRowsWithinRadius) {
  // Rows 0-3 lie within 0.05 of 0.5 at both cells, rows 4-5 do not.
  const std::vector<double> rows = {0.5, 0.52, 0.48, 0.54, 0.7, 0.1};
  const Dataset d = MakeDataset(6, 1, 2, [&](auto i, auto, auto k) {
    return i == 5 && k == 1 ? 0.5 : rows[i];
  });
  TriclusterPattern pattern;
  pattern.variables = {0};
  pattern.contexts = {0, 1};
  pattern.expectations = {0.5, 0.5};
  pattern.radius = 0.05;
  EXPECT_EQ(PatternCoverage(d, pattern), 4u);
  EXPECT_EQ(MatchingObservations(d, pattern),
            (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(PatternCoverage, MonotoneInRadius) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Dataset d = MakeDataset(30, 3, 4, [&](auto, auto, auto) { return u(rng); });
  const Tricluster t{{0, 1, 2}, {0, 2}, {1, 2, 3}};
  std::size_t previous = 0;
  for (double r = 0.0; r <= 1.0; r += 0.05) {
    const std::size_t c = PatternCoverage(d, PatternOf(d, t, r));
    EXPECT_GE(c, previous);
    previous = c;
  }
}

TEST(OutcomeCoverage, CountsAndUnknowns) {
  const std::vector<std::string> labels = {"a", "b", "a", "a"};
  EXPECT_EQ(OutcomeCoverage(labels, "a"), 3u);
  EXPECT_EQ(OutcomeCoverage(labels, "b"), 1u);
  EXPECT_TRIMOF_ERROR(OutcomeCoverage(labels, "z"), ErrorKind::kUnknownOutcome);
  EXPECT_EQ(OutcomeAlphabet(labels), (std::vector<std::string>{"a", "b"}));
}

TEST(RuleCoverage, CountsCoOccurrence) {
  // Rows 1-3 carry the pattern (value 0.9); their labels are a, a, b.
  const Dataset d =
      MakeDataset(5, 1, 1, [](auto i, auto, auto) {
        return i >= 1 && i <= 3 ? 0.9 : 0.1;
      }).WithLabels({"a", "a", "a", "b", "b"});
  const auto pattern = PatternOf(d, {{1, 2, 3}, {0}, {0}});
  EXPECT_EQ(RuleCoverage(d, pattern, "a"), 2u);
  EXPECT_EQ(RuleCoverage(d, pattern, "b"), 1u);
}

TEST(RuleCoverage, DisjointRowsGiveZero) {
  const Dataset d =
      MakeDataset(4, 1, 1, [](auto i, auto, auto) { return i < 2 ? 0.9 : 0.1; })
          .WithLabels({"x", "x", "y", "y"});
  EXPECT_EQ(RuleCoverage(d, PatternOf(d, {{0, 1}, {0}, {0}}), "y"), 0u);
  EXPECT_TRIMOF_ERROR(RuleCoverage(d.WithoutLabels(),
                                   PatternOf(d, {{0, 1}, {0}, {0}}), "y"),
                      ErrorKind::kMissingLabels);
}

TEST(RuleCoverage, MatchesRowScanOnRandomInstances) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> level(0, 3);
  std::uniform_int_distribution<int> label(0, 2);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::string> labels;
    for (int i = 0; i < 20; ++i) labels.push_back(std::string(1, 'a' + label(rng)));
    const Dataset d =
        MakeDataset(20, 2, 2, [&](auto, auto, auto) { return level(rng) / 3.0; })
            .WithLabels(labels);
    const Tricluster t{{0, 1}, {0, 1}, {0, 1}};
    const auto pattern = PatternOf(d, t, 0.2);
    for (const std::string outcome : {"a", "b", "c"}) {
      if (std::count(labels.begin(), labels.end(), outcome) == 0) continue;
      std::size_t expected = 0;
      for (std::size_t i = 0; i < 20; ++i) {
        bool match = true;
        for (std::size_t j = 0; j < 2; ++j) {
          for (std::size_t k = 0; k < 2; ++k) {
            match = match && std::fabs(d.at(i, j, k) -
                                       pattern.expectation(j, k)) <= 0.2;
          }
        }
        if (match && labels[i] == outcome) ++expected;
      }
      const std::size_t rule = RuleCoverage(d, pattern, outcome);
      EXPECT_EQ(rule, expected);
      EXPECT_LE(rule, std::min(PatternCoverage(d, pattern),
                               OutcomeCoverage(labels, outcome)));
    }
  }
}

TEST(TriclusterJson, UsesAxisIdsAndRoundTrips) {
  const Dataset d = MakeDataset(3, 2, 2, [](auto, auto, auto) { return 0.0; });
  const Tricluster t{{0, 2}, {1}, {0, 1}};
  const std::string json = TriclusterToJson(d, t);
  EXPECT_NE(json.find("\"o2\""), std::string::npos);
  EXPECT_NE(json.find("\"v1\""), std::string::npos);
  EXPECT_EQ(TriclusterFromJson(d, json), t);
  EXPECT_TRIMOF_ERROR(
      TriclusterFromJson(d, R"({"I":["nope"],"J":["v0"],"K":["c0"]})"),
      ErrorKind::kInvalidTricluster);
}

}  // namespace
}  // namespace trimof
