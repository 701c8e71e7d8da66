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

#include "trimof/config_io.h"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "json.hpp"
#include "trimof/error.h"

namespace trimof {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json ParseObject(std::string_view text, const char* what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::kInvalidConfig,
                std::string(what) + " must be a JSON object");
  }
  return doc;
}

void CheckKeys(const json& object, std::initializer_list<const char*> keys,
               const char* what) {
  if (!object.is_object()) {
    throw Error(ErrorKind::kInvalidConfig,
                std::string(what) + " must be a JSON object");
  }
  for (const auto& item : object.items()) {
    const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) {
      return item.key() == k;
    });
    if (!known) {
      throw Error(ErrorKind::kInvalidConfig, std::string("unknown key '") +
                                                 item.key() + "' in " + what);
    }
  }
}

template <typename T>
void Read(const json& object, const char* key, T& out) {
  if (!object.contains(key)) return;
  try {
    out = object.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::kInvalidConfig,
                std::string("invalid value for '") + key + "'");
  }
}

template <typename T>
void ReadOptional(const json& object, const char* key, std::optional<T>& out) {
  if (!object.contains(key)) return;
  if (object.at(key).is_null()) {
    out.reset();
    return;
  }
  T value{};
  Read(object, key, value);
  out = value;
}

template <typename T>
ordered_json OptionalValue(const std::optional<T>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

ordered_json ObjectiveValue(const ObjectiveConfig& c) {
  ordered_json mof;
  mof["mode"] = MofModeName(c.mof.mode);
  mof["betas"] = c.mof.betas;
  mof["alphas"] = c.mof.alphas;
  mof["theta"] = c.mof.significance.theta;
  mof["bonferroni_n"] = OptionalValue(c.mof.significance.bonferroni_n);
  mof["sample_size"] = c.mof.sample_size;
  mof["percentile_rank"] = OptionalValue(c.mof.percentile_rank);
  ordered_json discrimination;
  discrimination["desired_lift"] = c.discrimination.desired_lift;
  discrimination["w_d1"] = c.discrimination.w_d1;
  discrimination["w_d2"] = c.discrimination.w_d2;
  ordered_json out;
  out["pqc"] = QualityMeasureName(c.pqc);
  out["radius"] = c.radius;
  out["mof"] = std::move(mof);
  out["discrimination"] = std::move(discrimination);
  return out;
}

ObjectiveConfig ObjectiveFromValue(const json& in, ObjectiveConfig c) {
  CheckKeys(in, {"pqc", "radius", "mof", "discrimination"}, "objective");
  if (in.contains("pqc")) {
    std::string name;
    Read(in, "pqc", name);
    c.pqc = ParseQualityMeasure(name);
  }
  Read(in, "radius", c.radius);
  if (in.contains("mof")) {
    const json& mof = in.at("mof");
    CheckKeys(mof,
              {"mode", "betas", "alphas", "theta", "bonferroni_n",
               "sample_size", "percentile_rank"},
              "mof");
    if (mof.contains("mode")) {
      std::string name;
      Read(mof, "mode", name);
      c.mof.mode = ParseMofMode(name);
    }
    Read(mof, "betas", c.mof.betas);
    Read(mof, "alphas", c.mof.alphas);
    Read(mof, "theta", c.mof.significance.theta);
    ReadOptional(mof, "bonferroni_n", c.mof.significance.bonferroni_n);
    Read(mof, "sample_size", c.mof.sample_size);
    ReadOptional(mof, "percentile_rank", c.mof.percentile_rank);
  }
  if (in.contains("discrimination")) {
    const json& d = in.at("discrimination");
    CheckKeys(d, {"desired_lift", "w_d1", "w_d2"}, "discrimination");
    Read(d, "desired_lift", c.discrimination.desired_lift);
    Read(d, "w_d1", c.discrimination.w_d1);
    Read(d, "w_d2", c.discrimination.w_d2);
  }
  return c;
}

}  // namespace

std::string ObjectiveConfigToJson(const ObjectiveConfig& config) {
  return ObjectiveValue(config).dump();
}

ObjectiveConfig ObjectiveConfigFromJson(std::string_view text,
                                        ObjectiveConfig base) {
  return ObjectiveFromValue(ParseObject(text, "objective"), std::move(base));
}

std::string TrimaxConfigToJson(const TrimaxConfig& c, bool include_threads) {
  ordered_json out;
  out["delta"] = c.delta;
  out["lambda"] = c.lambda;
  out["max_triclusters"] = c.max_triclusters;
  out["min_dims"] = c.min_dims;
  out["seed"] = c.seed;
  if (include_threads) out["threads"] = c.threads;
  out["objective"] = ObjectiveValue(c.objective);
  return out.dump();
}

TrimaxConfig TrimaxConfigFromJson(std::string_view text, TrimaxConfig c) {
  const json in = ParseObject(text, "trimax config");
  CheckKeys(in,
            {"delta", "lambda", "max_triclusters", "min_dims", "seed",
             "threads", "objective"},
            "trimax config");
  Read(in, "delta", c.delta);
  Read(in, "lambda", c.lambda);
  Read(in, "max_triclusters", c.max_triclusters);
  Read(in, "min_dims", c.min_dims);
  Read(in, "seed", c.seed);
  Read(in, "threads", c.threads);
  if (in.contains("objective")) {
    c.objective = ObjectiveFromValue(in.at("objective"), c.objective);
  }
  return c;
}

std::string TrigenConfigToJson(const TrigenConfig& c, bool include_threads) {
  ordered_json out;
  out["n_triclusters"] = c.n_triclusters;
  out["population_size"] = c.population_size;
  out["generations"] = c.generations;
  out["tournament_size"] = c.tournament_size;
  out["crossover_prob"] = c.crossover_prob;
  out["mutation_prob"] = c.mutation_prob;
  out["elite_fraction"] = c.elite_fraction;
  out["overlap_penalty_weight"] = c.overlap_penalty_weight;
  out["volume_weight"] = c.volume_weight;
  out["min_dims"] = c.min_dims;
  out["seed"] = c.seed;
  if (include_threads) out["threads"] = c.threads;
  out["objective"] = ObjectiveValue(c.objective);
  return out.dump();
}

TrigenConfig TrigenConfigFromJson(std::string_view text, TrigenConfig c) {
  const json in = ParseObject(text, "trigen config");
  CheckKeys(in,
            {"n_triclusters", "population_size", "generations",
             "tournament_size", "crossover_prob", "mutation_prob",
             "elite_fraction", "overlap_penalty_weight", "volume_weight",
             "min_dims", "seed", "threads", "objective"},
            "trigen config");
  Read(in, "n_triclusters", c.n_triclusters);
  Read(in, "population_size", c.population_size);
  Read(in, "generations", c.generations);
  Read(in, "tournament_size", c.tournament_size);
  Read(in, "crossover_prob", c.crossover_prob);
  Read(in, "mutation_prob", c.mutation_prob);
  Read(in, "elite_fraction", c.elite_fraction);
  Read(in, "overlap_penalty_weight", c.overlap_penalty_weight);
  Read(in, "volume_weight", c.volume_weight);
  Read(in, "min_dims", c.min_dims);
  Read(in, "seed", c.seed);
  Read(in, "threads", c.threads);
  if (in.contains("objective")) {
    c.objective = ObjectiveFromValue(in.at("objective"), c.objective);
  }
  return c;
}

std::string PlantSpecToJson(const PlantSpec& s) {
  ordered_json out;
  out["n"] = s.n;
  out["m"] = s.m;
  out["p"] = s.p;
  out["block_i"] = s.block_i;
  out["block_j"] = s.block_j;
  out["block_k"] = s.block_k;
  out["coherence"] = CoherenceName(s.coherence);
  out["block_value"] = s.block_value;
  out["noise_sigma"] = s.noise_sigma;
  out["label_association"] = s.label_association;
  out["num_outcomes"] = s.num_outcomes;
  out["background"] = BackgroundName(s.background);
  out["seed"] = s.seed;
  return out.dump();
}

PlantSpec PlantSpecFromJson(std::string_view text, PlantSpec s) {
  const json in = ParseObject(text, "synthetic spec");
  CheckKeys(in,
            {"n", "m", "p", "block_i", "block_j", "block_k", "coherence",
             "block_value", "noise_sigma", "label_association",
             "num_outcomes", "background", "seed"},
            "synthetic spec");
  Read(in, "n", s.n);
  Read(in, "m", s.m);
  Read(in, "p", s.p);
  Read(in, "block_i", s.block_i);
  Read(in, "block_j", s.block_j);
  Read(in, "block_k", s.block_k);
  if (in.contains("coherence")) {
    std::string name;
    Read(in, "coherence", name);
    s.coherence = ParseCoherence(name);
  }
  Read(in, "block_value", s.block_value);
  Read(in, "noise_sigma", s.noise_sigma);
  Read(in, "label_association", s.label_association);
  Read(in, "num_outcomes", s.num_outcomes);
  if (in.contains("background")) {
    std::string name;
    Read(in, "background", name);
    s.background = ParseBackground(name);
  }
  Read(in, "seed", s.seed);
  return s;
}

}  // namespace trimof
