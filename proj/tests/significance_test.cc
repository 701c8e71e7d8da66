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

#include "trimof/significance.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.h"

namespace trimof {
namespace {

using testing::MakeDataset;

TriclusterPattern SinglePattern(std::vector<std::size_t> contexts,
                                std::vector<double> expectations,
                                double radius) {
  TriclusterPattern pattern;
  pattern.variables = {0};
  pattern.contexts = std::move(contexts);
  pattern.expectations = std::move(expectations);
  pattern.radius = radius;
  return pattern;
}

TEST(PatternProbability, FullRangeHitsSmoothingCap) {
  const Dataset d = MakeDataset(7, 2, 2, [](auto i, auto j, auto k) {
    return static_cast<double>((i + j + k) % 3) / 2.0;
  });
  const auto pattern = PatternOf(d, testing::Whole(d), 1.0);
  const NullModel null = PatternProbability(d, pattern);
  EXPECT_NEAR(null.pattern_probability(), std::pow(7.0 / 8.0, 4), 1e-15);
}

TEST(PatternProbability, HalfTheRows) {
  const Dataset d = MakeDataset(10, 1, 1, [](auto i, auto, auto) {
    return i < 5 ? 0.2 : 0.8;
  });
  const NullModel null = PatternProbability(d, SinglePattern({0}, {0.2}, 0.05));
  EXPECT_DOUBLE_EQ(null.pattern_probability(), 0.5);
}

TEST(PatternProbability, ProductOfCellFrequencies) {
  // Context 0 matches 7 of 10 rows, context 1 matches 3 of 10.
  const Dataset d = MakeDataset(10, 1, 2, [](auto i, auto, auto k) {
    if (k == 0) return i < 7 ? 0.5 : 0.9;
    return i < 3 ? 0.3 : 0.0;
  });
  const NullModel null =
      PatternProbability(d, SinglePattern({0, 1}, {0.5, 0.3}, 0.05));
  ASSERT_EQ(null.cell_probabilities.size(), 2u);
  EXPECT_NEAR(null.cell_probabilities[0], 0.7, 1e-12);
  EXPECT_NEAR(null.cell_probabilities[1], 0.3, 1e-12);
  EXPECT_NEAR(null.pattern_probability(), 0.21, 1e-12);
}

TEST(PatternProbability, NeverZeroOrOne) {
  const Dataset d = MakeDataset(9, 1, 1, [](auto, auto, auto) { return 0.5; });
  const NullModel all = PatternProbability(d, SinglePattern({0}, {0.5}, 0.0));
  EXPECT_LT(all.pattern_probability(), 1.0);
  const NullModel none = PatternProbability(d, SinglePattern({0}, {0.0}, 0.0));
  EXPECT_GT(none.pattern_probability(), 0.0);
  EXPECT_DOUBLE_EQ(none.pattern_probability(), 0.1);
}

TEST(BinomialTail, Basics) {
  EXPECT_DOUBLE_EQ(BinomialTail(0.37, 9, 0), 1.0);
  EXPECT_NEAR(BinomialTail(0.5, 4, 3), 0.3125, 1e-15);
  for (std::size_t s = 0; s <= 6; ++s) EXPECT_DOUBLE_EQ(BinomialTail(1.0, 6, s), 1.0);
  EXPECT_EQ(BinomialTail(0.0, 6, 1), 0.0);
  EXPECT_TRIMOF_ERROR(BinomialTail(0.5, 4, 5), ErrorKind::kInvalidSupport);
}

TEST(BinomialTail, MonotoneInSupportAndProbability) {
  for (std::size_t n : {5u, 30u, 200u}) {
    double previous = 2.0;
    for (std::size_t s = 0; s <= n; ++s) {
      const double v = BinomialTail(0.3, n, s);
      EXPECT_LE(v, previous);
      EXPECT_GE(v, 0.0);
      previous = v;
    }
    previous = -1.0;
    for (double p = 0.0; p <= 1.0; p += 0.05) {
      const double v = BinomialTail(p, n, n / 3);
      EXPECT_GE(v, previous - 1e-15);
      previous = v;
    }
  }
}

TEST(BinomialTail, LogFormKeepsTinyTails) {
  // ln P(X >= 50) for Binomial(50, 1e-10) is 50 ln(1e-10) exactly.
  EXPECT_NEAR(LogBinomialTail(50.0 * std::log(1e-10) / 50.0, 50, 50),
              50.0 * std::log(1e-10), 1e-9);
  EXPECT_EQ(LogBinomialTail(-INFINITY, 5, 1), -INFINITY);
}

TEST(Bonferroni, DividesTheta) {
  EXPECT_DOUBLE_EQ(Bonferroni(0.05, 1), 0.05);
  EXPECT_DOUBLE_EQ(Bonferroni(0.05, 20), 0.0025);
  EXPECT_DOUBLE_EQ(Bonferroni(0.05, 5), 0.01);
  SignificanceConfig config;
  config.bonferroni_n = 20;
  EXPECT_DOUBLE_EQ(config.EffectiveTheta(), 0.0025);
}

TEST(SignificanceConfig, Validation) {
  SignificanceConfig config;
  config.theta = 1.0;
  EXPECT_TRIMOF_ERROR(config.Validate(), ErrorKind::kInvalidConfig);
  config.theta = 0.05;
  config.bonferroni_n = 0;
  EXPECT_TRIMOF_ERROR(config.Validate(), ErrorKind::kInvalidConfig);
}

TEST(Ssc, Examples) {
  EXPECT_EQ(Ssc(0.5, 0.05), 1.0);
  EXPECT_EQ(Ssc(0.05, 0.05), 1.0);
  EXPECT_NEAR(Ssc(0.04, 0.05), 0.31066746727980593, 1e-15);
  EXPECT_NEAR(Ssc(std::exp(-250.0), 0.05), 0.004, 1e-15);
  EXPECT_NEAR(SscFromLog(-250.0, 0.05), 0.004, 1e-15);
}

TEST(Ssc, ZeroIsClamped) {
  const double v = Ssc(0.0, 0.05);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_GT(v, 0.0);
  EXPECT_EQ(v, Ssc(std::numeric_limits<double>::denorm_min(), 0.05));
}

TEST(Ssc, MonotoneBelowTheta) {
  double previous = 0.0;
  for (double p = 1e-12; p < 0.05; p *= 1.7) {
    const double v = Ssc(p, 0.05);
    EXPECT_GT(v, previous);
    EXPECT_LE(v, 1.0);
    previous = v;
  }
}

}  // namespace
}  // namespace trimof
