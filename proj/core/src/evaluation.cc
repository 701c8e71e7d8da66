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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "trimof/discrimination.h"
#include "trimof/error.h"
#include "trimof/quality.h"
#include "trimof/significance.h"

namespace trimof {
namespace {

constexpr const char* kMetricOrder[] = {
    "size_I", "size_J", "size_K",   "msr",     "lsl",     "msl",
    "lift",   "standard_lift",      "dpc",     "p_value", "ssc",
    "pearson", "spearman", "mof_add", "mof_mul"};

std::optional<double> TryPqc(QualityMeasure measure, const Dataset& dataset,
                             const Tricluster& t) {
  try {
    return EvaluatePqc(measure, dataset, t);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kDegenerateProfile) return std::nullopt;
    throw;
  }
}

std::vector<std::vector<double>> Profiles(const Dataset& dataset,
                                          const Tricluster& t) {
  std::vector<std::vector<double>> profiles;
  profiles.reserve(t.observations.size());
  for (std::size_t i : t.observations) {
    std::vector<double> profile;
    profile.reserve(t.variables.size() * t.contexts.size());
    for (std::size_t j : t.variables) {
      const auto series = dataset.Series(i, j);
      for (std::size_t k : t.contexts) profile.push_back(series[k]);
    }
    profiles.push_back(std::move(profile));
  }
  return profiles;
}

bool IsConstant(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [&](double x) { return x == v.front(); });
}

double Mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) /
         static_cast<double>(v.size());
}

double SampleVariance(std::span<const double> v, double mean) {
  double sum = 0.0;
  for (double x : v) sum += (x - mean) * (x - mean);
  return sum / static_cast<double>(v.size() - 1);
}

}  // namespace

std::vector<std::pair<std::string, double>> ScoredTricluster::Metrics() const {
  std::vector<std::pair<std::string, double>> out;
  out.emplace_back("size_I", static_cast<double>(tricluster.observations.size()));
  out.emplace_back("size_J", static_cast<double>(tricluster.variables.size()));
  out.emplace_back("size_K", static_cast<double>(tricluster.contexts.size()));
  auto add = [&](const char* name, const std::optional<double>& value) {
    if (value) out.emplace_back(name, *value);
  };
  add("msr", pqc_msr);
  add("lsl", pqc_lsl);
  add("msl", pqc_msl);
  add("lift", lift);
  add("standard_lift", standard_lift);
  add("dpc", dpc);
  out.emplace_back("p_value", p_value);
  out.emplace_back("ssc", ssc);
  add("pearson", pearson);
  add("spearman", spearman);
  add("mof_add", mof_add);
  add("mof_mul", mof_mul);
  return out;
}

ScoredTricluster ScoreTricluster(const Dataset& dataset, const Tricluster& t,
                                 const ObjectiveConfig& config) {
  config.Validate();
  ValidateTricluster(dataset, t);
  ScoredTricluster scored;
  scored.tricluster = t;
  scored.pattern = PatternOf(dataset, t, config.radius);

  scored.pqc_msr = Msr(dataset, t);
  scored.pqc_lsl = TryPqc(QualityMeasure::kLsl, dataset, t);
  scored.pqc_msl = TryPqc(QualityMeasure::kMsl, dataset, t);

  const NullModel null_model = PatternProbability(dataset, scored.pattern);
  const std::size_t n = dataset.num_observations();
  scored.log_p_value = LogBinomialTail(null_model.log_pattern_probability, n,
                                       t.observations.size());
  scored.p_value = std::exp(scored.log_p_value);
  scored.ssc = SscFromLog(scored.log_p_value,
                          config.mof.significance.EffectiveTheta());

  const auto matches = MatchingObservations(dataset, scored.pattern);
  scored.coverage = matches.size();
  if (dataset.has_labels()) {
    if (matches.empty()) {
      scored.lift = 0.0;
      scored.standard_lift = 0.0;
      scored.dpc = 1.0;
    } else {
      const DpcResult dpc = DpcFromMatches(EncodeLabels(dataset.labels()),
                                           matches, config.discrimination);
      scored.chosen_outcome = dpc.rule.outcome;
      scored.lift = dpc.lift;
      scored.standard_lift = dpc.standard_lift;
      scored.dpc = dpc.value;
    }
  }

  if (t.observations.size() >= 2) {
    const auto pearson =
        ProfileCorrelation(dataset, t, CorrelationMethod::kPearson);
    const auto spearman =
        ProfileCorrelation(dataset, t, CorrelationMethod::kSpearman);
    scored.pearson = pearson.value;
    scored.spearman = spearman.value;
    scored.degenerate_profiles = pearson.degenerate_profiles;
  }

  const std::optional<double> pqc =
      config.pqc == QualityMeasure::kMsr   ? scored.pqc_msr
      : config.pqc == QualityMeasure::kLsl ? scored.pqc_lsl
                                           : scored.pqc_msl;
  if (pqc && scored.dpc) {
    MofConfig additive = config.mof;
    additive.mode = MofMode::kAdditive;
    MofConfig multiplicative = config.mof;
    multiplicative.mode = MofMode::kMultiplicative;
    scored.mof_add = MofScore(*pqc, *scored.dpc, scored.ssc, additive);
    scored.mof_mul = MofScore(*pqc, *scored.dpc, scored.ssc, multiplicative);
  }
  if (pqc && (config.mof.mode == MofMode::kOriginal || scored.dpc)) {
    scored.objective = Objective(dataset, config).Evaluate(t).score;
  }
  return scored;
}

double PearsonCorrelation(std::span<const double> a,
                          std::span<const double> b) {
  const double mean_a = Mean(a);
  const double mean_b = Mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    const double da = a[x] - mean_a;
    const double db = b[x] - mean_b;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa <= 0.0 || sbb <= 0.0) return 0.0;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return values[x] < values[y];
  });
  std::vector<double> ranks(values.size());
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && values[order[end]] == values[order[start]]) {
      ++end;
    }
    // Positions start..end-1 hold 1-based ranks start+1..end.
    const double rank = (static_cast<double>(start + 1) +
                         static_cast<double>(end)) / 2.0;
    for (std::size_t r = start; r < end; ++r) ranks[order[r]] = rank;
    start = end;
  }
  return ranks;
}

ProfileCorrelationResult ProfileCorrelation(const Dataset& dataset,
                                            const Tricluster& t,
                                            CorrelationMethod method) {
  if (t.observations.size() < 2) {
    throw Error(ErrorKind::kNotEnoughProfiles,
                "profile correlation needs at least two observations");
  }
  auto profiles = Profiles(dataset, t);
  if (method == CorrelationMethod::kSpearman) {
    for (auto& profile : profiles) profile = AverageRanks(profile);
  }
  ProfileCorrelationResult result;
  std::vector<bool> degenerate(profiles.size());
  for (std::size_t u = 0; u < profiles.size(); ++u) {
    degenerate[u] = profiles[u].size() < 2 || IsConstant(profiles[u]);
    if (degenerate[u]) ++result.degenerate_profiles;
  }
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t u = 0; u < profiles.size(); ++u) {
    for (std::size_t v = u + 1; v < profiles.size(); ++v) {
      ++pairs;
      if (degenerate[u] || degenerate[v]) continue;
      sum += PearsonCorrelation(profiles[u], profiles[v]);
    }
  }
  result.value = sum / static_cast<double>(pairs);
  return result;
}

TTestResult WelchTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorKind::kDegenerateSample,
                "each sample needs at least two values");
  }
  const double mean_a = Mean(a);
  const double mean_b = Mean(b);
  const double var_a = SampleVariance(a, mean_a);
  const double var_b = SampleVariance(b, mean_b);
  if (var_a == 0.0 && var_b == 0.0) {
    if (mean_a == mean_b) return TTestResult{0.0, 1.0, 0.0};
    throw Error(ErrorKind::kDegenerateSample,
                "both samples are constant with different means");
  }
  const double ratio_a = var_a / static_cast<double>(a.size());
  const double ratio_b = var_b / static_cast<double>(b.size());
  const double se2 = ratio_a + ratio_b;
  const double dof =
      se2 * se2 / (ratio_a * ratio_a / static_cast<double>(a.size() - 1) +
                   ratio_b * ratio_b / static_cast<double>(b.size() - 1));
  TTestResult result;
  result.t = (mean_a - mean_b) / std::sqrt(se2);
  result.degrees_of_freedom = dof;
  const boost::math::students_t_distribution<double> dist(dof);
  result.p_value =
      std::min(1.0, 2.0 * boost::math::cdf(dist, -std::fabs(result.t)));
  return result;
}

MetricSummary Summarize(std::span<const double> values) {
  MetricSummary summary;
  summary.count = values.size();
  if (values.empty()) return summary;
  summary.mean = Mean(values);
  summary.stddev =
      values.size() < 2 ? 0.0 : std::sqrt(SampleVariance(values, summary.mean));
  return summary;
}

std::span<const char* const> MetricNames() { return kMetricOrder; }

const MetricSummary* SolutionSummary::Find(const std::string& name) const {
  for (const auto& [metric, summary] : metrics) {
    if (metric == name) return &summary;
  }
  return nullptr;
}

SolutionSummary SummarizeMetricRows(const std::vector<MetricRow>& rows,
                                    std::map<std::string, std::string> meta) {
  if (rows.empty()) {
    throw Error(ErrorKind::kEmptySolution, "solution has no triclusters");
  }
  SolutionSummary summary;
  summary.meta = std::move(meta);
  summary.num_triclusters = rows.size();
  for (const char* name : kMetricOrder) {
    std::vector<double> values;
    for (const auto& row : rows) {
      for (const auto& [metric, value] : row) {
        if (metric == name) values.push_back(value);
      }
    }
    if (!values.empty()) summary.metrics.emplace_back(name, Summarize(values));
  }
  auto rounded = [&](const char* name) -> std::size_t {
    const MetricSummary* s = summary.Find(name);
    return s ? static_cast<std::size_t>(std::llround(s->mean)) : 0;
  };
  summary.mean_i = rounded("size_I");
  summary.mean_j = rounded("size_J");
  summary.mean_k = rounded("size_K");
  return summary;
}

}  // namespace trimof
