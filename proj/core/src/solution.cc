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

#include <cstdio>

#include "json_io.h"
#include "trimof/error.h"

namespace trimof {
namespace {

using nlohmann::ordered_json;

template <typename T>
void PutOptional(ordered_json& out, const char* key,
                 const std::optional<T>& value) {
  if (value) out[key] = *value;
}

std::optional<double> GetOptional(const nlohmann::json& in, const char* key) {
  if (!in.contains(key) || in.at(key).is_null()) return std::nullopt;
  return in.at(key).get<double>();
}

ordered_json ScoresToJson(const ScoredTricluster& s) {
  ordered_json out;
  PutOptional(out, "msr", s.pqc_msr);
  PutOptional(out, "lsl", s.pqc_lsl);
  PutOptional(out, "msl", s.pqc_msl);
  out["coverage"] = s.coverage;
  PutOptional(out, "chosen_outcome", s.chosen_outcome);
  PutOptional(out, "lift", s.lift);
  PutOptional(out, "standard_lift", s.standard_lift);
  PutOptional(out, "dpc", s.dpc);
  out["p_value"] = s.p_value;
  out["log_p_value"] = s.log_p_value;
  out["ssc"] = s.ssc;
  PutOptional(out, "pearson", s.pearson);
  PutOptional(out, "spearman", s.spearman);
  out["degenerate_profiles"] = s.degenerate_profiles;
  PutOptional(out, "mof_add", s.mof_add);
  PutOptional(out, "mof_mul", s.mof_mul);
  PutOptional(out, "objective", s.objective);
  return out;
}

void ScoresFromJson(const nlohmann::json& in, ScoredTricluster& s) {
  s.pqc_msr = GetOptional(in, "msr");
  s.pqc_lsl = GetOptional(in, "lsl");
  s.pqc_msl = GetOptional(in, "msl");
  s.coverage = in.value("coverage", std::size_t{0});
  if (in.contains("chosen_outcome")) {
    s.chosen_outcome = in.at("chosen_outcome").get<std::string>();
  }
  s.lift = GetOptional(in, "lift");
  s.standard_lift = GetOptional(in, "standard_lift");
  s.dpc = GetOptional(in, "dpc");
  s.p_value = in.at("p_value").get<double>();
  s.log_p_value = in.at("log_p_value").get<double>();
  s.ssc = in.at("ssc").get<double>();
  s.pearson = GetOptional(in, "pearson");
  s.spearman = GetOptional(in, "spearman");
  s.degenerate_profiles = in.value("degenerate_profiles", std::size_t{0});
  s.mof_add = GetOptional(in, "mof_add");
  s.mof_mul = GetOptional(in, "mof_mul");
  s.objective = GetOptional(in, "objective");
}

nlohmann::json Parse(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
}

std::string MetaValueString(const nlohmann::json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

}  // namespace

std::map<std::string, std::string> SolutionMeta::Flatten() const {
  std::map<std::string, std::string> out;
  out["algo"] = algo;
  out["pqc"] = std::string(QualityMeasureName(pqc));
  out["mof_mode"] = std::string(MofModeName(mof_mode));
  out["seed"] = std::to_string(seed);
  out["config_hash"] = config_hash;
  if (delta) out["delta"] = nlohmann::json(*delta).dump();
  if (delta_effective) {
    out["delta_effective"] = nlohmann::json(*delta_effective).dump();
  }
  return out;
}

std::string SolutionToJson(const Dataset& dataset, const Solution& solution) {
  ordered_json meta;
  meta["algo"] = solution.meta.algo;
  meta["pqc"] = QualityMeasureName(solution.meta.pqc);
  meta["mof_mode"] = MofModeName(solution.meta.mof_mode);
  meta["seed"] = solution.meta.seed;
  meta["config_hash"] = solution.meta.config_hash;
  PutOptional(meta, "delta", solution.meta.delta);
  PutOptional(meta, "delta_effective", solution.meta.delta_effective);

  ordered_json triclusters = ordered_json::array();
  for (const auto& s : solution.triclusters) {
    const nlohmann::json ids =
        internal::TriclusterToJsonValue(dataset, s.tricluster);
    ordered_json entry;
    entry["I"] = ids.at("I");
    entry["J"] = ids.at("J");
    entry["K"] = ids.at("K");
    ordered_json pattern = ordered_json::array();
    for (std::size_t jj = 0; jj < s.pattern.variables.size(); ++jj) {
      ordered_json row = ordered_json::array();
      for (std::size_t kk = 0; kk < s.pattern.contexts.size(); ++kk) {
        row.push_back(s.pattern.expectation(jj, kk));
      }
      pattern.push_back(std::move(row));
    }
    entry["pattern"] = std::move(pattern);
    entry["radius"] = s.pattern.radius;
    entry["scores"] = ScoresToJson(s);
    triclusters.push_back(std::move(entry));
  }
  ordered_json out;
  out["meta"] = std::move(meta);
  out["triclusters"] = std::move(triclusters);
  return out.dump(2) + "\n";
}

Solution SolutionFromJson(const Dataset& dataset, std::string_view text) {
  const nlohmann::json doc = Parse(text);
  Solution solution;
  try {
    const auto& meta = doc.at("meta");
    solution.meta.algo = meta.at("algo").get<std::string>();
    solution.meta.pqc = ParseQualityMeasure(meta.at("pqc").get<std::string>());
    solution.meta.mof_mode =
        ParseMofMode(meta.at("mof_mode").get<std::string>());
    solution.meta.seed = meta.at("seed").get<std::uint64_t>();
    solution.meta.config_hash = meta.at("config_hash").get<std::string>();
    solution.meta.delta = GetOptional(meta, "delta");
    solution.meta.delta_effective = GetOptional(meta, "delta_effective");

    for (const auto& entry : doc.at("triclusters")) {
      ScoredTricluster s;
      s.tricluster = internal::TriclusterFromJsonValue(dataset, entry);
      s.pattern.variables = s.tricluster.variables;
      s.pattern.contexts = s.tricluster.contexts;
      s.pattern.radius = entry.at("radius").get<double>();
      for (const auto& row : entry.at("pattern")) {
        for (const auto& value : row) {
          s.pattern.expectations.push_back(value.get<double>());
        }
      }
      if (s.pattern.expectations.size() !=
          s.pattern.variables.size() * s.pattern.contexts.size()) {
        throw Error(ErrorKind::kParseError,
                    "pattern shape does not match J x K");
      }
      ScoresFromJson(entry.at("scores"), s);
      solution.triclusters.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  return solution;
}

SolutionMetrics ReadSolutionMetrics(std::string_view text) {
  const nlohmann::json doc = Parse(text);
  SolutionMetrics out;
  try {
    for (const auto& [key, value] : doc.at("meta").items()) {
      out.meta[key] = MetaValueString(value);
    }
    for (const auto& entry : doc.at("triclusters")) {
      ScoredTricluster s;
      s.tricluster.observations.resize(entry.at("I").size());
      s.tricluster.variables.resize(entry.at("J").size());
      s.tricluster.contexts.resize(entry.at("K").size());
      ScoresFromJson(entry.at("scores"), s);
      out.rows.push_back(s.Metrics());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  return out;
}

SolutionSummary SummarizeSolution(const Solution& solution) {
  std::vector<MetricRow> rows;
  rows.reserve(solution.triclusters.size());
  for (const auto& s : solution.triclusters) rows.push_back(s.Metrics());
  return SummarizeMetricRows(rows, solution.meta.Flatten());
}

std::string Fnv1aHex(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace trimof
