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

#include "trimof/evaluation.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_util.h"
#include "trimof/solution.h"
#include "trimof/synthetic.h"

namespace trimof {
namespace {

using testing::MakeDataset;
using testing::Whole;

// Three observations, two variables, three contexts; rows are the J x K
// profiles in row-major order.
const double kProfiles[3][6] = {{0.1, 0.5, 0.3, 0.9, 0.2, 0.4},
                                {0.3, 0.3, 0.8, 0.1, 0.6, 0.7},
                                {0.9, 0.2, 0.4, 0.5, 0.5, 0.0}};

Dataset ProfileDataset() {
  return MakeDataset(3, 2, 3, [](auto i, auto j, auto k) {
    return kProfiles[i][j * 3 + k];
  });
}

TEST(ProfileCorrelation, IdenticalProfiles) {
  const Dataset d = MakeDataset(4, 2, 3, [](auto, auto j, auto k) {
    return 0.1 * k + 0.5 * j;
  });
  EXPECT_NEAR(ProfileCorrelation(d, Whole(d), CorrelationMethod::kPearson).value,
              1.0, 1e-15);
  EXPECT_NEAR(ProfileCorrelation(d, Whole(d), CorrelationMethod::kSpearman).value,
              1.0, 1e-15);
}

TEST(ProfileCorrelation, NegatedProfile) {
  const Dataset d = MakeDataset(2, 1, 4, [](auto i, auto, auto k) {
    const double v = static_cast<double>(k) - 1.5;
    return i == 0 ? v : -v;
  });
  EXPECT_NEAR(ProfileCorrelation(d, Whole(d), CorrelationMethod::kPearson).value,
              -1.0, 1e-15);
}

TEST(ProfileCorrelation, MatchesPairwiseReference) {
  const Dataset d = ProfileDataset();
  EXPECT_NEAR(ProfileCorrelation(d, Whole(d), CorrelationMethod::kPearson).value,
              -0.4218244320494506, 1e-12);
  EXPECT_NEAR(ProfileCorrelation(d, Whole(d), CorrelationMethod::kSpearman).value,
              -0.44674826292426345, 1e-12);
}

TEST(ProfileCorrelation, FlatProfilesCountAsZero) {
  const Dataset d = MakeDataset(3, 1, 3, [](auto i, auto, auto k) {
    return i == 2 ? 0.5 : static_cast<double>(k);
  });
  const auto r = ProfileCorrelation(d, Whole(d), CorrelationMethod::kPearson);
  EXPECT_EQ(r.degenerate_profiles, 1u);
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-15);
}

TEST(ProfileCorrelation, NeedsTwoObservations) {
  const Dataset d = ProfileDataset();
  EXPECT_TRIMOF_ERROR(
      ProfileCorrelation(d, {{0}, {0, 1}, {0, 1, 2}}, CorrelationMethod::kPearson),
      ErrorKind::kNotEnoughProfiles);
}

TEST(ProfileCorrelation, Invariances) {
  const Dataset d = ProfileDataset();
  const Dataset shifted = MakeDataset(3, 2, 3, [&](auto i, auto j, auto k) {
    return d.at(i, j, k) + 7.0;
  });
  const Dataset cubed = MakeDataset(3, 2, 3, [&](auto i, auto j, auto k) {
    return std::pow(d.at(i, j, k), 3.0) + 2.0;
  });
  const Dataset reordered = MakeDataset(3, 2, 3, [&](auto i, auto j, auto k) {
    return d.at(2 - i, j, k);
  });
  const auto pearson = [](const Dataset& x) {
    return ProfileCorrelation(x, Whole(x), CorrelationMethod::kPearson).value;
  };
  const auto spearman = [](const Dataset& x) {
    return ProfileCorrelation(x, Whole(x), CorrelationMethod::kSpearman).value;
  };
  EXPECT_NEAR(pearson(d), pearson(shifted), 1e-12);
  EXPECT_NEAR(pearson(d), pearson(reordered), 1e-15);
  EXPECT_NEAR(spearman(d), spearman(cubed), 1e-15);
}

TEST(AverageRanks, SharesTies) {
  const std::vector<double> v = {0.3, 0.1, 0.3, 0.2};
  EXPECT_EQ(AverageRanks(v), (std::vector<double>{3.5, 1.0, 3.5, 2.0}));
}

TEST(WelchTTest, IdenticalSamples) {
  const std::vector<double> a = {1, 2, 3, 4, 5};
  const TTestResult r = WelchTTest(a, a);
  EXPECT_EQ(r.t, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(WelchTTest, ShiftedSamplesReference) {
  const std::vector<double> a = {1, 2, 3, 4, 5};
  const std::vector<double> b = {11.001, 11.999, 13.002, 14.0, 14.998};
  const TTestResult r = WelchTTest(a, b);
  EXPECT_NEAR(r.t, -10.002498436015562, 1e-9);
  EXPECT_NEAR(r.p_value, 8.472379887005626e-06, 1e-12);
  EXPECT_LT(r.p_value, 1e-3);
}

TEST(WelchTTest, UnequalSizesReference) {
  const std::vector<double> a = {0.2, 0.4, 0.35, 0.5};
  const std::vector<double> b = {0.6, 0.55, 0.7, 0.8, 0.65};
  const TTestResult r = WelchTTest(a, b);
  EXPECT_NEAR(r.t, -3.9211833175976722, 1e-12);
  EXPECT_NEAR(r.degrees_of_freedom, 5.576411730804209, 1e-10);
  EXPECT_NEAR(r.p_value, 0.009006797069213193, 1e-12);
  const TTestResult swapped = WelchTTest(b, a);
  EXPECT_DOUBLE_EQ(swapped.t, -r.t);
  EXPECT_DOUBLE_EQ(swapped.p_value, r.p_value);
}

TEST(WelchTTest, DegenerateSamples) {
  const std::vector<double> flat = {2, 2, 2};
  EXPECT_DOUBLE_EQ(WelchTTest(flat, flat).p_value, 1.0);
  const std::vector<double> other = {3, 3, 3};
  EXPECT_TRIMOF_ERROR(WelchTTest(flat, other), ErrorKind::kDegenerateSample);
  const std::vector<double> one = {1};
  EXPECT_TRIMOF_ERROR(WelchTTest(one, flat), ErrorKind::kDegenerateSample);
}

TEST(WelchTTest, PValueInRange) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(6), b(9);
    for (double& x : a) x = g(rng);
    for (double& x : b) x = 0.5 + 2.0 * g(rng);
    const double p = WelchTTest(a, b).p_value;
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

TEST(Summarize, MeanAndSampleDeviation) {
  const std::vector<double> two = {0.2, 0.4};
  const MetricSummary s = Summarize(two);
  EXPECT_NEAR(s.mean, 0.3, 1e-15);
  EXPECT_NEAR(s.stddev, 0.14142135623730953, 1e-15);
  const std::vector<double> one = {0.7};
  EXPECT_EQ(Summarize(one).stddev, 0.0);
}

ObjectiveConfig Objective(MofMode mode) {
  ObjectiveConfig config;
  config.mof.mode = mode;
  return config;
}

TEST(ScoreTricluster, ConstantLabeledBlock) {
  PlantSpec spec;
  spec.seed = 3;
  const PlantedDataset planted = Generate(spec);
  const ScoredTricluster s =
      ScoreTricluster(planted.dataset, planted.truth, Objective(MofMode::kAdditive));
  EXPECT_NEAR(*s.pqc_msr, 0.0, 1e-20);
  EXPECT_EQ(*s.chosen_outcome, planted.target);
  EXPECT_DOUBLE_EQ(*s.standard_lift, 1.0);
  EXPECT_NEAR(*s.lift, 50.0 / 15.0, 1e-12);
  EXPECT_EQ(s.coverage, 15u);
  EXPECT_TRUE(s.mof_add.has_value());
  EXPECT_EQ(*s.objective, *s.mof_add);
  EXPECT_GE(s.p_value, 0.0);
  EXPECT_LE(s.p_value, 1.0);
}

TEST(ScoreTricluster, UnlabeledDataOmitsDiscrimination) {
  PlantSpec spec;
  spec.seed = 3;
  const PlantedDataset planted = Generate(spec);
  const Dataset unlabeled = planted.dataset.WithoutLabels();
  const ScoredTricluster s =
      ScoreTricluster(unlabeled, planted.truth, Objective(MofMode::kOriginal));
  EXPECT_FALSE(s.lift.has_value());
  EXPECT_FALSE(s.dpc.has_value());
  EXPECT_FALSE(s.mof_add.has_value());
  EXPECT_LT(s.p_value, 0.05);
  EXPECT_LT(s.ssc, 1.0);
  EXPECT_NEAR(*s.objective, 0.0, 1e-20);
}

TEST(ScoreTricluster, SerializedScoresReplayExactly) {
  PlantSpec spec;
  spec.noise_sigma = 0.02;
  spec.label_association = 0.8;
  spec.seed = 12;
  const PlantedDataset planted = Generate(spec);
  const ObjectiveConfig config = Objective(MofMode::kMultiplicative);
  Solution solution;
  solution.meta.algo = "trigen";
  solution.triclusters.push_back(
      ScoreTricluster(planted.dataset, planted.truth, config));
  solution.triclusters.push_back(ScoreTricluster(
      planted.dataset, {{0, 1, 2}, {0, 1}, {3, 4, 5, 6}}, config));
  const Solution reloaded =
      SolutionFromJson(planted.dataset, SolutionToJson(planted.dataset, solution));
  ASSERT_EQ(reloaded.triclusters.size(), 2u);
  for (std::size_t x = 0; x < 2; ++x) {
    const ScoredTricluster again = ScoreTricluster(
        planted.dataset, reloaded.triclusters[x].tricluster, config);
    EXPECT_EQ(again.Metrics(), solution.triclusters[x].Metrics());
    EXPECT_EQ(reloaded.triclusters[x].Metrics(), solution.triclusters[x].Metrics());
  }
}

TEST(SummarizeSolution, ReloadedSummaryIsIdentical) {
  PlantSpec spec;
  spec.seed = 5;
  const PlantedDataset planted = Generate(spec);
  Solution solution;
  solution.meta.algo = "trimax";
  for (std::size_t x = 0; x < 3; ++x) {
    solution.triclusters.push_back(ScoreTricluster(
        planted.dataset, {{x, x + 1, x + 4}, {0, 1}, {x, x + 2, x + 5}},
        Objective(MofMode::kAdditive)));
  }
  const SolutionSummary a = SummarizeSolution(solution);
  const SolutionSummary b = SummarizeSolution(
      SolutionFromJson(planted.dataset, SolutionToJson(planted.dataset, solution)));
  ASSERT_EQ(a.metrics.size(), b.metrics.size());
  for (std::size_t x = 0; x < a.metrics.size(); ++x) {
    EXPECT_EQ(a.metrics[x].first, b.metrics[x].first);
    EXPECT_EQ(a.metrics[x].second.mean, b.metrics[x].second.mean);
    EXPECT_EQ(a.metrics[x].second.stddev, b.metrics[x].second.stddev);
  }
  EXPECT_EQ(a.mean_i, 3u);
  EXPECT_EQ(a.mean_j, 2u);
  EXPECT_EQ(a.meta.at("algo"), "trimax");

  for (const auto& [name, summary] : a.metrics) {
    double lo = 1e300, hi = -1e300;
    for (const auto& t : solution.triclusters) {
      for (const auto& [metric, value] : t.Metrics()) {
        if (metric == name) {
          lo = std::min(lo, value);
          hi = std::max(hi, value);
        }
      }
    }
    EXPECT_GE(summary.mean, lo - 1e-15) << name;
    EXPECT_LE(summary.mean, hi + 1e-15) << name;
  }
  EXPECT_TRIMOF_ERROR(SummarizeSolution(Solution{}), ErrorKind::kEmptySolution);
}

}  // namespace
}  // namespace trimof
