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

#include "trimof/patterns.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "json_io.h"
#include "trimof/error.h"

namespace trimof {
namespace {

// Slack on the radius comparison so that a mean of identical values still
// matches those values at radius 0.
constexpr double kMatchSlack = 1e-12;

void CheckAxis(const std::vector<std::size_t>& indices, std::size_t bound,
               const char* axis) {
  if (indices.empty()) {
    throw Error(ErrorKind::kInvalidTricluster,
                std::string("empty ") + axis + " set");
  }
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= bound) {
      throw Error(ErrorKind::kInvalidTricluster,
                  std::string(axis) + " index " + std::to_string(indices[a]) +
                      " out of range");
    }
    if (a > 0 && indices[a] <= indices[a - 1]) {
      throw Error(ErrorKind::kInvalidTricluster,
                  std::string(axis) + " indices must be sorted and unique");
    }
  }
}

std::vector<std::size_t> SortedUnique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Tricluster Tricluster::Normalized(std::vector<std::size_t> observations,
                                  std::vector<std::size_t> variables,
                                  std::vector<std::size_t> contexts) {
  return Tricluster{SortedUnique(std::move(observations)),
                    SortedUnique(std::move(variables)),
                    SortedUnique(std::move(contexts))};
}

bool Tricluster::Contains(std::size_t i, std::size_t j, std::size_t k) const {
  return std::binary_search(observations.begin(), observations.end(), i) &&
         std::binary_search(variables.begin(), variables.end(), j) &&
         std::binary_search(contexts.begin(), contexts.end(), k);
}

void ValidateTricluster(const Dataset& dataset, const Tricluster& t) {
  CheckAxis(t.observations, dataset.num_observations(), "observation");
  CheckAxis(t.variables, dataset.num_variables(), "variable");
  CheckAxis(t.contexts, dataset.num_contexts(), "context");
}

TriclusterPattern PatternOf(const Dataset& dataset, const Tricluster& t,
                            double radius) {
  ValidateTricluster(dataset, t);
  TriclusterPattern pattern;
  pattern.variables = t.variables;
  pattern.contexts = t.contexts;
  pattern.radius = radius;
  pattern.expectations.assign(t.variables.size() * t.contexts.size(), 0.0);
  for (std::size_t i : t.observations) {
    for (std::size_t jj = 0; jj < t.variables.size(); ++jj) {
      const auto series = dataset.Series(i, t.variables[jj]);
      double* row = pattern.expectations.data() + jj * t.contexts.size();
      for (std::size_t kk = 0; kk < t.contexts.size(); ++kk) {
        row[kk] += series[t.contexts[kk]];
      }
    }
  }
  const double count = static_cast<double>(t.observations.size());
  for (double& c : pattern.expectations) c /= count;
  return pattern;
}

bool MatchesPattern(const Dataset& dataset, const TriclusterPattern& pattern,
                    std::size_t i) {
  const double limit = pattern.radius + kMatchSlack;
  for (std::size_t jj = 0; jj < pattern.variables.size(); ++jj) {
    const auto series = dataset.Series(i, pattern.variables[jj]);
    for (std::size_t kk = 0; kk < pattern.contexts.size(); ++kk) {
      if (std::fabs(series[pattern.contexts[kk]] -
                    pattern.expectation(jj, kk)) > limit) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> MatchingObservations(
    const Dataset& dataset, const TriclusterPattern& pattern) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < dataset.num_observations(); ++i) {
    if (MatchesPattern(dataset, pattern, i)) rows.push_back(i);
  }
  return rows;
}

std::size_t PatternCoverage(const Dataset& dataset,
                            const TriclusterPattern& pattern) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < dataset.num_observations(); ++i) {
    if (MatchesPattern(dataset, pattern, i)) ++count;
  }
  return count;
}

std::size_t OutcomeCoverage(const std::vector<std::string>& labels,
                            std::string_view outcome) {
  const auto count = static_cast<std::size_t>(
      std::count(labels.begin(), labels.end(), outcome));
  if (count == 0) {
    throw Error(ErrorKind::kUnknownOutcome,
                "outcome '" + std::string(outcome) + "' does not occur");
  }
  return count;
}

std::size_t RuleCoverage(const Dataset& dataset,
                         const TriclusterPattern& pattern,
                         std::string_view outcome) {
  const auto& labels = dataset.labels();
  OutcomeCoverage(labels, outcome);
  std::size_t count = 0;
  for (std::size_t i = 0; i < dataset.num_observations(); ++i) {
    if (labels[i] == outcome && MatchesPattern(dataset, pattern, i)) ++count;
  }
  return count;
}

std::vector<std::string> OutcomeAlphabet(
    const std::vector<std::string>& labels) {
  const std::set<std::string> distinct(labels.begin(), labels.end());
  return {distinct.begin(), distinct.end()};
}

namespace internal {

nlohmann::json TriclusterToJsonValue(const Dataset& dataset,
                                     const Tricluster& t) {
  auto ids = [](const std::vector<std::size_t>& indices,
                const std::vector<std::string>& names) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t index : indices) out.push_back(names.at(index));
    return out;
  };
  return nlohmann::json{
      {"I", ids(t.observations, dataset.observation_ids())},
      {"J", ids(t.variables, dataset.variable_ids())},
      {"K", ids(t.contexts, dataset.context_ids())},
  };
}

Tricluster TriclusterFromJsonValue(const Dataset& dataset,
                                   const nlohmann::json& value) {
  auto indices = [&](const char* key, auto lookup) {
    if (!value.contains(key) || !value.at(key).is_array()) {
      throw Error(ErrorKind::kInvalidTricluster,
                  std::string("missing array '") + key + "'");
    }
    std::vector<std::size_t> out;
    for (const auto& id : value.at(key)) {
      const std::string name =
          id.is_string() ? id.get<std::string>() : id.dump();
      const auto index = lookup(name);
      if (!index) {
        throw Error(ErrorKind::kInvalidTricluster,
                    std::string("unknown id '") + name + "' in " + key);
      }
      out.push_back(*index);
    }
    return out;
  };
  Tricluster t = Tricluster::Normalized(
      indices("I", [&](std::string_view id) {
        return dataset.ObservationIndex(id);
      }),
      indices("J", [&](std::string_view id) {
        return dataset.VariableIndex(id);
      }),
      indices("K", [&](std::string_view id) {
        return dataset.ContextIndex(id);
      }));
  ValidateTricluster(dataset, t);
  return t;
}

}  // namespace internal

std::string TriclusterToJson(const Dataset& dataset, const Tricluster& t) {
  return internal::TriclusterToJsonValue(dataset, t).dump();
}

Tricluster TriclusterFromJson(const Dataset& dataset, std::string_view json) {
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  return internal::TriclusterFromJsonValue(dataset, value);
}

}  // namespace trimof
