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

#ifndef TRIMOF_EVALUATION_H_
#define TRIMOF_EVALUATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trimof/objective.h"
#include "trimof/patterns.h"
#include "trimof/tensor.h"

namespace trimof {

// Per-tricluster statistics. Discrimination fields are absent on unlabeled
// data; correlations are absent when |I| < 2.
struct ScoredTricluster {
  Tricluster tricluster;
  TriclusterPattern pattern;

  std::optional<double> pqc_msr;
  std::optional<double> pqc_lsl;
  std::optional<double> pqc_msl;

  std::size_t coverage = 0;
  std::optional<std::string> chosen_outcome;
  std::optional<double> lift;
  std::optional<double> standard_lift;
  std::optional<double> dpc;

  double p_value = 1.0;
  double log_p_value = 0.0;
  double ssc = 1.0;

  std::optional<double> pearson;
  std::optional<double> spearman;
  std::size_t degenerate_profiles = 0;

  std::optional<double> mof_add;
  std::optional<double> mof_mul;
  // Score under the objective the search ran with.
  std::optional<double> objective;

  // Named numeric metrics present on this tricluster, in report order:
  // size_I, size_J, size_K, msr, lsl, msl, lift, standard_lift, dpc, p_value,
  // ssc, pearson, spearman, mof_add, mof_mul.
  std::vector<std::pair<std::string, double>> Metrics() const;
};

// Scores every statistic of `t` on `dataset` under `config` (the config's
// quality measure feeds the MOF columns). Deterministic.
ScoredTricluster ScoreTricluster(const Dataset& dataset, const Tricluster& t,
                                 const ObjectiveConfig& config);

enum class CorrelationMethod { kPearson, kSpearman };

struct ProfileCorrelationResult {
  double value = 0.0;
  // Observations whose profile has zero variance (after ranking for
  // Spearman); they contribute 0 to every pair they are part of.
  std::size_t degenerate_profiles = 0;
};

// Mean pairwise correlation over all unordered observation pairs in I, each
// profile being the observation's values over J x K in row-major order.
// Throws kNotEnoughProfiles when |I| < 2.
ProfileCorrelationResult ProfileCorrelation(const Dataset& dataset,
                                            const Tricluster& t,
                                            CorrelationMethod method);

// Pearson correlation of two equally long series; 0 if either is constant.
double PearsonCorrelation(std::span<const double> a, std::span<const double> b);
// Average ranks (1-based), ties sharing the mean rank.
std::vector<double> AverageRanks(std::span<const double> values);

struct TTestResult {
  double t = 0.0;
  double p_value = 1.0;
  double degrees_of_freedom = 0.0;
};

// Welch's unequal-variance t-test with Welch-Satterthwaite degrees of freedom
// and a two-sided p-value. Both samples constant with equal means gives
// t = 0, p = 1; other zero-variance cases throw kDegenerateSample, as do
// samples with fewer than two values.
TTestResult WelchTTest(std::span<const double> a, std::span<const double> b);

struct MetricSummary {
  double mean = 0.0;
  // Sample standard deviation (n - 1); 0 for a single value.
  double stddev = 0.0;
  std::size_t count = 0;
};

struct SolutionSummary {
  std::map<std::string, std::string> meta;
  std::size_t num_triclusters = 0;
  // Mean dimensions, rounded to the nearest integer.
  std::size_t mean_i = 0, mean_j = 0, mean_k = 0;
  // Metric name -> summary, in the Metrics() order.
  std::vector<std::pair<std::string, MetricSummary>> metrics;

  const MetricSummary* Find(const std::string& name) const;
};

MetricSummary Summarize(std::span<const double> values);

// Names of every per-tricluster metric, in report order.
std::span<const char* const> MetricNames();

// Per-tricluster metric rows, as extracted by ScoredTricluster::Metrics() or
// read back from a Solution JSON file.
using MetricRow = std::vector<std::pair<std::string, double>>;

// Throws kEmptySolution for zero rows.
SolutionSummary SummarizeMetricRows(const std::vector<MetricRow>& rows,
                                    std::map<std::string, std::string> meta);

}  // namespace trimof

#endif  // TRIMOF_EVALUATION_H_
