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

#include "trimof/quality.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "test_util.h"

namespace trimof {
namespace {

using testing::MakeDataset;
using testing::Whole;

TEST(Msr, ConstantIsZero) {
  const Dataset d = MakeDataset(3, 4, 5, [](auto, auto, auto) { return 5.0; });
  EXPECT_EQ(Msr(d, Whole(d)), 0.0);
}

TEST(Msr, AdditiveModelIsAnnihilated) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> r(4), c(5), t(6);
  for (double& x : r) x = u(rng);
  for (double& x : c) x = u(rng);
  for (double& x : t) x = u(rng);
  const Dataset d = MakeDataset(4, 5, 6, [&](auto i, auto j, auto k) {
    return 0.3 + r[i] + c[j] + t[k];
  });
  EXPECT_NEAR(Msr(d, Whole(d)), 0.0, 1e-12);
}

TEST(Msr, HandEvaluatedSlice) {
  // Cell residues are +-0.25, so the mean square is 0.0625.
  const Dataset d = MakeDataset(2, 2, 1, [](auto i, auto j, auto) {
    return i == 1 && j == 1 ? 1.0 : 0.0;
  });
  EXPECT_DOUBLE_EQ(Msr(d, Whole(d)), 0.0625);
}

TEST(Msr, SingleCellAndEmptyAxis) {
  const Dataset d = MakeDataset(2, 2, 2, [](auto i, auto j, auto k) {
    return i * 0.3 + j * j * 0.2 + k * 0.7 * i;
  });
  EXPECT_EQ(Msr(d, {{1}, {0}, {1}}), 0.0);
  EXPECT_TRIMOF_ERROR(Msr(d, {{}, {0}, {1}}), ErrorKind::kEmptyTricluster);
}

TEST(Msr, InvariantUnderAxisPermutation) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Dataset d = MakeDataset(4, 3, 5, [&](auto, auto, auto) { return u(rng); });
  // Reversing every axis is a permutation of the tricluster's slices.
  const Dataset reversed = MakeDataset(4, 3, 5, [&](auto i, auto j, auto k) {
    return d.at(3 - i, 2 - j, 4 - k);
  });
  EXPECT_NEAR(Msr(d, Whole(d)), Msr(reversed, Whole(reversed)), 1e-15);
}

TEST(Msr, ContributionsAverageToScore) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Dataset d = MakeDataset(5, 4, 3, [&](auto, auto, auto) { return u(rng); });
  const MsrBreakdown b = MsrContributions(d, Whole(d));
  EXPECT_DOUBLE_EQ(b.score, Msr(d, Whole(d)));
  double mean = 0.0;
  for (double x : b.observations) mean += x / 5.0;
  EXPECT_NEAR(mean, b.score, 1e-14);
  ASSERT_EQ(b.contexts.size(), 3u);
}

TEST(Lsl, IdenticalProfilesScoreZero) {
  const Dataset d = MakeDataset(3, 2, 4, [](auto, auto j, auto k) {
    return 0.1 * k + 0.3 * j;
  });
  EXPECT_NEAR(Lsl(d, Whole(d)), 0.0, 1e-15);
}

TEST(Lsl, OppositeSlopes) {
  // Observation 0 rises, observation 1 falls. Every view then compares one
  // profile of slope 1 with one of slope -1: |atan(1) - atan(-1)| / pi = 0.5.
  const Dataset d = MakeDataset(2, 1, 2, [](auto i, auto, auto k) {
    return i == 0 ? static_cast<double>(k) : 1.0 - static_cast<double>(k);
  });
  EXPECT_NEAR(Lsl(d, Whole(d)), 0.5, 1e-15);
}

TEST(Lsl, InterceptShiftsAreIgnored) {
  const Dataset d = MakeDataset(3, 2, 5, [](auto i, auto j, auto k) {
    return 0.5 * i + 0.02 * k + 0.01 * j;
  });
  const Tricluster t{{0, 1, 2}, {0}, {0, 1, 2, 3, 4}};
  EXPECT_NEAR(Lsl(d, t), Lsl(MakeDataset(3, 2, 5, [&](auto i, auto j, auto k) {
                                return d.at(i, j, k) + 3.0 * i;
                              }),
                              t),
              1e-15);
}

TEST(Lsl, SinglePointProfilesAreDegenerate) {
  const Dataset d = MakeDataset(2, 2, 2, [](auto, auto, auto) { return 0.0; });
  EXPECT_TRIMOF_ERROR(Lsl(d, {{0, 1}, {0}, {0}}), ErrorKind::kDegenerateProfile);
  EXPECT_TRIMOF_ERROR(Msl(d, {{0, 1}, {0}, {0}}), ErrorKind::kDegenerateProfile);
}

TEST(Msl, TranslatedProfilesScoreZero) {
  const Dataset d = MakeDataset(3, 2, 4, [](auto i, auto j, auto k) {
    return std::sin(static_cast<double>(k)) + 0.2 * i + 0.1 * j;
  });
  const Tricluster t{{0, 1, 2}, {0}, {0, 1, 2, 3}};
  const double v = Msl(d, t);
  // Context profiles run across observations and all rise by 0.2 per step;
  // the other two views compare identical shapes.
  EXPECT_NEAR(v, 0.0, 1e-15);
}

TEST(Msl, FlatVersusZigzag) {
  // Observation 0 is flat, observation 1 zigzags with unit slopes.
  // Views {I,J,K} and {I,K,J}: every segment differs by pi/4 -> 0.25.
  // View {K,I,J}: context profiles have slopes 0, 1, 0 over the observation
  // axis; pairwise differences pi/4, 0, pi/4 average pi/6 -> 1/6.
  const Dataset d = MakeDataset(2, 1, 3, [](auto i, auto, auto k) {
    return i == 1 && k == 1 ? 1.0 : 0.0;
  });
  EXPECT_NEAR(Msl(d, Whole(d)), (0.25 + 0.25 + 1.0 / 6.0) / 3.0, 1e-15);
}

TEST(Msl, SingleProfileIsVacuous) {
  const Dataset d = MakeDataset(1, 1, 3, [](auto, auto, auto k) {
    return 0.3 * k * k;
  });
  // With one observation and one variable only the {K,I,J} view has
  // several profiles, each of one point, which is degenerate.
  EXPECT_TRIMOF_ERROR(Msl(d, Whole(d)), ErrorKind::kDegenerateProfile);
  const Dataset wide = MakeDataset(1, 2, 3, [](auto, auto j, auto k) {
    return 0.3 * k + j;
  });
  EXPECT_NEAR(Msl(wide, Whole(wide)), 0.0, 1e-15);
}

TEST(EvaluatePqc, Dispatches) {
  const Dataset constant =
      MakeDataset(2, 2, 3, [](auto, auto, auto) { return 0.7; });
  EXPECT_EQ(EvaluatePqc(QualityMeasure::kMsr, constant, Whole(constant)), 0.0);
  EXPECT_NEAR(EvaluatePqc(QualityMeasure::kLsl, constant, Whole(constant)), 0.0,
              1e-15);
  const Dataset translated = MakeDataset(3, 2, 3, [](auto i, auto j, auto k) {
    return 0.1 * k + 0.2 * i + 0.3 * j;
  });
  EXPECT_NEAR(EvaluatePqc(QualityMeasure::kMsl, translated, Whole(translated)),
              0.0, 1e-15);
  EXPECT_EQ(ParseQualityMeasure("lsl"), QualityMeasure::kLsl);
  EXPECT_EQ(QualityMeasureName(QualityMeasure::kMsl), "msl");
  EXPECT_TRIMOF_ERROR(ParseQualityMeasure("rms"), ErrorKind::kInvalidConfig);
}

TEST(Quality, InvariantUnderIdRelabeling) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Dataset d = MakeDataset(3, 3, 4, [&](auto, auto, auto) { return u(rng); });
  const Dataset renamed({"x", "y", "z"}, {"p", "q", "r"}, {"t1", "t2", "t3", "t4"},
                        std::vector<double>(d.values().begin(), d.values().end()));
  for (auto m : {QualityMeasure::kMsr, QualityMeasure::kLsl, QualityMeasure::kMsl}) {
    EXPECT_EQ(EvaluatePqc(m, d, Whole(d)), EvaluatePqc(m, renamed, Whole(renamed)));
    EXPECT_GE(EvaluatePqc(m, d, Whole(d)), 0.0);
  }
}

}  // namespace
}  // namespace trimof
