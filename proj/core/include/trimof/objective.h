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

#ifndef TRIMOF_OBJECTIVE_H_
#define TRIMOF_OBJECTIVE_H_

#include <cstddef>

#include "trimof/discrimination.h"
#include "trimof/mof.h"
#include "trimof/patterns.h"
#include "trimof/quality.h"
#include "trimof/tensor.h"

namespace trimof {

// Everything needed to score a candidate tricluster during a search.
struct ObjectiveConfig {
  QualityMeasure pqc = QualityMeasure::kMsr;
  MofConfig mof;
  DiscriminationConfig discrimination;
  double radius = kDefaultPatternRadius;

  void Validate() const;
};

// Support-side terms: discriminative power and significance of the pattern
// induced by a tricluster.
struct SupportTerms {
  // 1 (worst) when no observation carries the pattern.
  double dpc = 1.0;
  double ssc = 1.0;
  double log_p_value = 0.0;
  std::size_t coverage = 0;
};

struct ObjectiveTerms {
  double pqc = 0.0;
  SupportTerms support;
  double score = 0.0;
};

// Objective bound to one dataset. In original mode the score is the pattern
// quality alone and no labels are needed; the MOF modes throw kMissingLabels
// at construction when the dataset is unlabeled.
//
// The p-value is the binomial tail of observing |I| or more carriers among
// all n observations under the per-cell null model.
class Objective {
 public:
  Objective(const Dataset& dataset, ObjectiveConfig config);

  const ObjectiveConfig& config() const { return config_; }
  const Dataset& dataset() const { return *dataset_; }
  bool uses_mof() const { return config_.mof.mode != MofMode::kOriginal; }

  double Pqc(const Tricluster& t) const;
  SupportTerms Support(const Tricluster& t) const;
  double Combine(double pqc, const SupportTerms& support) const;
  ObjectiveTerms Evaluate(const Tricluster& t) const;

 private:
  const Dataset* dataset_;
  ObjectiveConfig config_;
  EncodedLabels labels_;
  double theta_;
};

}  // namespace trimof

#endif  // TRIMOF_OBJECTIVE_H_
