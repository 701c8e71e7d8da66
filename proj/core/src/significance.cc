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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "trimof/error.h"

namespace trimof {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double LogChoose(std::size_t n, std::size_t k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

// log sum_{x = lo}^{hi} C(n, x) p^x q^(n - x), by log-sum-exp.
double LogBinomialRange(double log_p, double log_q, std::size_t n,
                        std::size_t lo, std::size_t hi) {
  std::vector<double> terms;
  terms.reserve(hi - lo + 1);
  double peak = kNegInf;
  double log_choose = LogChoose(n, lo);
  for (std::size_t x = lo; x <= hi; ++x) {
    const double term = log_choose + static_cast<double>(x) * log_p +
                        (x == n ? 0.0 : static_cast<double>(n - x) * log_q);
    terms.push_back(term);
    peak = std::max(peak, term);
    if (x < n) {
      log_choose += std::log(static_cast<double>(n - x)) -
                    std::log(static_cast<double>(x + 1));
    }
  }
  if (peak == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double term : terms) sum += std::exp(term - peak);
  return peak + std::log(sum);
}

}  // namespace

double SignificanceConfig::EffectiveTheta() const {
  return bonferroni_n ? Bonferroni(theta, *bonferroni_n) : theta;
}

void SignificanceConfig::Validate() const {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw Error(ErrorKind::kInvalidConfig, "theta must lie in (0, 1)");
  }
  if (bonferroni_n && *bonferroni_n == 0) {
    throw Error(ErrorKind::kInvalidConfig, "bonferroni_n must be positive");
  }
}

double NullModel::pattern_probability() const {
  return std::exp(log_pattern_probability);
}

NullModel PatternProbability(const Dataset& dataset,
                             const TriclusterPattern& pattern) {
  const std::size_t n = dataset.num_observations();
  const double denom = static_cast<double>(n) + 1.0;
  const double floor = 1.0 / denom;
  const double cap = static_cast<double>(n) / denom;
  const double limit = pattern.radius + 1e-12;
  const std::size_t nk = pattern.contexts.size();

  NullModel model;
  model.cell_probabilities.assign(pattern.num_cells(), 0.0);
  std::vector<std::size_t> counts(pattern.num_cells(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t jj = 0; jj < pattern.variables.size(); ++jj) {
      const auto series = dataset.Series(i, pattern.variables[jj]);
      for (std::size_t kk = 0; kk < nk; ++kk) {
        if (std::fabs(series[pattern.contexts[kk]] -
                      pattern.expectation(jj, kk)) <= limit) {
          ++counts[jj * nk + kk];
        }
      }
    }
  }
  for (std::size_t c = 0; c < counts.size(); ++c) {
    const double frequency =
        static_cast<double>(counts[c]) / static_cast<double>(n);
    const double p = std::clamp(frequency, floor, cap);
    model.cell_probabilities[c] = p;
    model.log_pattern_probability += std::log(p);
  }
  return model;
}

double LogBinomialTail(double log_p, std::size_t n, std::size_t support) {
  if (support > n) {
    throw Error(ErrorKind::kInvalidSupport,
                "support " + std::to_string(support) + " exceeds n = " +
                    std::to_string(n));
  }
  if (support == 0) return 0.0;
  if (log_p == kNegInf) return kNegInf;
  if (log_p >= 0.0) return 0.0;
  const double log_q = std::log1p(-std::exp(log_p));
  // Sum whichever side of the mean is the minority so that tails close to
  // one keep full relative precision in their complement.
  const double mean = static_cast<double>(n) * std::exp(log_p);
  if (static_cast<double>(support) > mean) {
    return std::min(0.0, LogBinomialRange(log_p, log_q, n, support, n));
  }
  const double lower = LogBinomialRange(log_p, log_q, n, 0, support - 1);
  return lower >= 0.0 ? kNegInf : std::log1p(-std::exp(lower));
}

double BinomialTail(double p, std::size_t n, std::size_t support) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kInvalidConfig, "probability outside [0, 1]");
  }
  const double log_p = p == 0.0 ? kNegInf : std::log(p);
  return std::exp(LogBinomialTail(log_p, n, support));
}

double Bonferroni(double theta, std::size_t n_patterns) {
  if (n_patterns == 0) {
    throw Error(ErrorKind::kInvalidConfig, "Bonferroni needs n_patterns >= 1");
  }
  return theta / static_cast<double>(n_patterns);
}

double SscFromLog(double log_p_value, double theta) {
  if (!(log_p_value < std::log(theta))) return 1.0;
  if (log_p_value == kNegInf) {
    log_p_value = std::log(std::numeric_limits<double>::denorm_min());
  }
  return 1.0 / std::fabs(log_p_value);
}

double Ssc(double p_value, double theta) {
  const double clamped =
      std::max(p_value, std::numeric_limits<double>::denorm_min());
  if (!(clamped < theta)) return 1.0;
  return 1.0 / std::fabs(std::log(clamped));
}

}  // namespace trimof
