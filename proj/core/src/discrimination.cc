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

#include "trimof/discrimination.h"

#include <algorithm>

#include "trimof/error.h"

namespace trimof {
namespace {

void RequireMarginals(const RuleStats& r, bool need_outcome) {
  if (r.pattern_count == 0) {
    throw Error(ErrorKind::kUndefinedRule, "pattern coverage is zero");
  }
  if (need_outcome && r.outcome_count == 0) {
    throw Error(ErrorKind::kUndefinedRule, "outcome coverage is zero");
  }
}

}  // namespace

DiscriminationConfig DiscriminationConfig::Normalized() const {
  if (!(desired_lift > 1.0)) {
    throw Error(ErrorKind::kInvalidConfig, "desired_lift must exceed 1");
  }
  if (w_d1 < 0.0 || w_d2 < 0.0 || w_d1 + w_d2 <= 0.0) {
    throw Error(ErrorKind::kInvalidConfig,
                "w_d1 and w_d2 must be non-negative with a positive sum");
  }
  const double total = w_d1 + w_d2;
  return DiscriminationConfig{desired_lift, w_d1 / total, w_d2 / total};
}

double Confidence(const RuleStats& r) {
  RequireMarginals(r, false);
  return static_cast<double>(r.rule_count) /
         static_cast<double>(r.pattern_count);
}

double Lift(const RuleStats& r) {
  RequireMarginals(r, true);
  return static_cast<double>(r.rule_count) /
         (static_cast<double>(r.pattern_count) *
          static_cast<double>(r.outcome_count)) *
         static_cast<double>(r.n);
}

double StandardLift(const RuleStats& r) {
  RequireMarginals(r, true);
  // Work in units of expected co-occurrence: lift * pattern * outcome / n.
  const auto joint = static_cast<long long>(r.pattern_count + r.outcome_count) -
                     static_cast<long long>(r.n);
  const long long lower = std::max(joint, 1LL);
  const auto upper =
      static_cast<long long>(std::min(r.pattern_count, r.outcome_count));
  if (upper == lower) return 1.0;
  const double value = static_cast<double>(
                           static_cast<long long>(r.rule_count) - lower) /
                       static_cast<double>(upper - lower);
  return std::clamp(value, 0.0, 1.0);
}

double NormalizedLift(double lift, double desired) {
  return lift > desired ? desired / lift : 1.0;
}

EncodedLabels EncodeLabels(const std::vector<std::string>& labels) {
  EncodedLabels encoded;
  encoded.alphabet = OutcomeAlphabet(labels);
  encoded.counts.assign(encoded.alphabet.size(), 0);
  encoded.codes.reserve(labels.size());
  for (const auto& label : labels) {
    const auto code = static_cast<std::size_t>(
        std::lower_bound(encoded.alphabet.begin(), encoded.alphabet.end(),
                         label) -
        encoded.alphabet.begin());
    encoded.codes.push_back(code);
    ++encoded.counts[code];
  }
  return encoded;
}

DpcResult DpcFromMatches(const EncodedLabels& labels,
                         const std::vector<std::size_t>& matches,
                         const DiscriminationConfig& config) {
  if (matches.empty()) {
    throw Error(ErrorKind::kUndefinedRule, "no observation carries the pattern");
  }
  const DiscriminationConfig cfg = config.Normalized();
  std::vector<std::size_t> rule_counts(labels.alphabet.size(), 0);
  for (std::size_t i : matches) ++rule_counts[labels.codes[i]];

  DpcResult best;
  std::size_t best_code = 0;
  for (std::size_t code = 0; code < labels.alphabet.size(); ++code) {
    const RuleStats stats{matches.size(), labels.counts[code],
                          rule_counts[code], labels.codes.size(), {}};
    const double lift = Lift(stats);
    // The alphabet is sorted, so a strict comparison keeps the smallest
    // symbol on ties.
    if (code == 0 || lift > best.lift) {
      best.lift = lift;
      best.rule = stats;
      best_code = code;
    }
  }
  best.rule.outcome = labels.alphabet[best_code];
  best.standard_lift = StandardLift(best.rule);
  best.normalized_lift = NormalizedLift(best.lift, cfg.desired_lift);
  best.value =
      cfg.w_d1 * best.normalized_lift + cfg.w_d2 * (1.0 - best.standard_lift);
  return best;
}

DpcResult Dpc(const Dataset& dataset, const TriclusterPattern& pattern,
              const DiscriminationConfig& config) {
  return DpcFromMatches(EncodeLabels(dataset.labels()),
                        MatchingObservations(dataset, pattern), config);
}

}  // namespace trimof
