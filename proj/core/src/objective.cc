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

#include "trimof/objective.h"

#include <algorithm>
#include <cmath>

#include "trimof/error.h"
#include "trimof/significance.h"

namespace trimof {

void ObjectiveConfig::Validate() const {
  mof.Validate();
  discrimination.Normalized();
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::kInvalidConfig, "radius must be non-negative");
  }
}

Objective::Objective(const Dataset& dataset, ObjectiveConfig config)
    : dataset_(&dataset), config_(std::move(config)) {
  config_.Validate();
  theta_ = config_.mof.significance.EffectiveTheta();
  if (uses_mof()) {
    labels_ = EncodeLabels(dataset.labels());
  } else if (dataset.has_labels()) {
    labels_ = EncodeLabels(dataset.labels());
  }
}

double Objective::Pqc(const Tricluster& t) const {
  return EvaluatePqc(config_.pqc, *dataset_, t);
}

SupportTerms Objective::Support(const Tricluster& t) const {
  const TriclusterPattern pattern = PatternOf(*dataset_, t, config_.radius);
  const std::size_t n = dataset_->num_observations();
  const std::size_t nk = pattern.contexts.size();
  const double limit = pattern.radius + 1e-12;

  // One pass over all observations gathers both the per-cell match counts of
  // the null model and the set of observations matching every cell.
  std::vector<std::size_t> cell_counts(pattern.num_cells(), 0);
  std::vector<std::size_t> matches;
  for (std::size_t i = 0; i < n; ++i) {
    bool all = true;
    for (std::size_t jj = 0; jj < pattern.variables.size(); ++jj) {
      const auto series = dataset_->Series(i, pattern.variables[jj]);
      for (std::size_t kk = 0; kk < nk; ++kk) {
        if (std::fabs(series[pattern.contexts[kk]] -
                      pattern.expectation(jj, kk)) <= limit) {
          ++cell_counts[jj * nk + kk];
        } else {
          all = false;
        }
      }
    }
    if (all) matches.push_back(i);
  }

  const double denom = static_cast<double>(n) + 1.0;
  double log_pattern_probability = 0.0;
  for (std::size_t count : cell_counts) {
    const double frequency =
        static_cast<double>(count) / static_cast<double>(n);
    log_pattern_probability +=
        std::log(std::clamp(frequency, 1.0 / denom, static_cast<double>(n) /
                                                        denom));
  }

  SupportTerms terms;
  terms.coverage = matches.size();
  terms.log_p_value =
      LogBinomialTail(log_pattern_probability, n, t.observations.size());
  terms.ssc = SscFromLog(terms.log_p_value, theta_);
  if (!matches.empty() && !labels_.alphabet.empty()) {
    terms.dpc =
        DpcFromMatches(labels_, matches, config_.discrimination).value;
  }
  return terms;
}

double Objective::Combine(double pqc, const SupportTerms& support) const {
  return MofScore(pqc, support.dpc, support.ssc, config_.mof);
}

ObjectiveTerms Objective::Evaluate(const Tricluster& t) const {
  ObjectiveTerms terms;
  terms.pqc = Pqc(t);
  if (uses_mof()) {
    terms.support = Support(t);
    terms.score = Combine(terms.pqc, terms.support);
  } else {
    terms.score = terms.pqc;
  }
  return terms;
}

}  // namespace trimof
