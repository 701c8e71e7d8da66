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

#include "trimof/solution.h"

#include <gtest/gtest.h>

#include "test_util.h"
#include "trimof/config_io.h"
#include "trimof/synthetic.h"

namespace trimof {
namespace {

Solution SmallSolution(const Dataset& d) {
  ObjectiveConfig config;
  config.mof.mode = MofMode::kAdditive;
  Solution s;
  s.meta.algo = "trimax";
  s.meta.pqc = QualityMeasure::kLsl;
  s.meta.mof_mode = MofMode::kAdditive;
  s.meta.seed = 42;
  s.meta.config_hash = "0123456789abcdef";
  s.meta.delta = 1e-3;
  s.meta.delta_effective = 0.2;
  s.triclusters.push_back(ScoreTricluster(d, {{0, 1, 2}, {0, 1}, {0, 1, 2}}, config));
  return s;
}

TEST(SolutionJson, RoundTripsByteForByte) {
  PlantSpec spec;
  spec.seed = 1;
  const PlantedDataset planted = Generate(spec);
  const Solution s = SmallSolution(planted.dataset);
  const std::string text = SolutionToJson(planted.dataset, s);
  const Solution back = SolutionFromJson(planted.dataset, text);
  EXPECT_EQ(SolutionToJson(planted.dataset, back), text);
  EXPECT_EQ(back.meta.seed, 42u);
  EXPECT_EQ(back.meta.pqc, QualityMeasure::kLsl);
  EXPECT_EQ(*back.meta.delta_effective, 0.2);
  EXPECT_NE(text.find("\"config_hash\": \"0123456789abcdef\""), std::string::npos);
}

TEST(SolutionJson, MetricsReadWithoutDataset) {
  PlantSpec spec;
  spec.seed = 1;
  const PlantedDataset planted = Generate(spec);
  const Solution s = SmallSolution(planted.dataset);
  const SolutionMetrics m = ReadSolutionMetrics(SolutionToJson(planted.dataset, s));
  ASSERT_EQ(m.rows.size(), 1u);
  EXPECT_EQ(m.rows[0], s.triclusters[0].Metrics());
  EXPECT_EQ(m.meta.at("algo"), "trimax");
  EXPECT_EQ(m.meta.at("mof_mode"), "add");
}

TEST(SolutionJson, Errors) {
  PlantSpec spec;
  const PlantedDataset planted = Generate(spec);
  EXPECT_TRIMOF_ERROR(SolutionFromJson(planted.dataset, "{not json"),
                      ErrorKind::kParseError);
  EXPECT_TRIMOF_ERROR(ReadSolutionMetrics("[1, 2"), ErrorKind::kParseError);
  const Dataset other = testing::MakeDataset(3, 2, 3, [](auto, auto, auto) { return 0.0; });
  EXPECT_TRIMOF_ERROR(
      SolutionFromJson(other, SolutionToJson(planted.dataset, SmallSolution(planted.dataset))),
      ErrorKind::kInvalidTricluster);
}

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(Fnv1aHex(""), "cbf29ce484222325");
  EXPECT_EQ(Fnv1aHex("a"), "af63dc4c8601ec8c");
}

TEST(ConfigJson, TrimaxRoundTripAndPartialOverride) {
  TrimaxConfig c;
  c.delta = 0.02;
  c.seed = 7;
  c.objective.mof.mode = MofMode::kMultiplicative;
  c.objective.mof.significance.bonferroni_n = 20;
  const TrimaxConfig back = TrimaxConfigFromJson(TrimaxConfigToJson(c));
  EXPECT_EQ(TrimaxConfigToJson(back), TrimaxConfigToJson(c));
  const TrimaxConfig partial = TrimaxConfigFromJson(R"({"lambda": 1.5})", c);
  EXPECT_EQ(partial.lambda, 1.5);
  EXPECT_EQ(partial.delta, 0.02);
  EXPECT_EQ(TrimaxConfigToJson(c, false).find("threads"), std::string::npos);
}

TEST(ConfigJson, TrigenAndPlantRoundTrip) {
  TrigenConfig c;
  c.generations = 12;
  c.objective.pqc = QualityMeasure::kMsl;
  EXPECT_EQ(TrigenConfigToJson(TrigenConfigFromJson(TrigenConfigToJson(c))),
            TrigenConfigToJson(c));
  PlantSpec s;
  s.coherence = Coherence::kAdditive;
  s.background = Background::kAdditive;
  EXPECT_EQ(PlantSpecToJson(PlantSpecFromJson(PlantSpecToJson(s))), PlantSpecToJson(s));
}

TEST(ConfigJson, Errors) {
  EXPECT_TRIMOF_ERROR(TrimaxConfigFromJson(R"({"lamda": 1.5})"),
                      ErrorKind::kInvalidConfig);
  EXPECT_TRIMOF_ERROR(TrimaxConfigFromJson(R"({"delta": "small"})"),
                      ErrorKind::kInvalidConfig);
  EXPECT_TRIMOF_ERROR(TrigenConfigFromJson(R"({"objective": {"mof": {"mode": "x"}}})"),
                      ErrorKind::kInvalidConfig);
  EXPECT_TRIMOF_ERROR(PlantSpecFromJson("{"), ErrorKind::kParseError);
  EXPECT_TRIMOF_ERROR(ObjectiveConfigFromJson("[]"), ErrorKind::kInvalidConfig);
}

}  // namespace
}  // namespace trimof
