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

#ifndef TRIMOF_CONFIG_IO_H_
#define TRIMOF_CONFIG_IO_H_

#include <string>
#include <string_view>

#include "trimof/search_trigen.h"
#include "trimof/search_trimax.h"
#include "trimof/synthetic.h"

namespace trimof {

// JSON forms of the search and generator configurations. Readers start from
// `base` and override only the keys present, so partial documents are fine;
// unknown keys and ill-typed values throw kInvalidConfig, malformed JSON
// throws kParseError. Writers emit every field in a fixed order.
//
// Objective keys: pqc, radius, mof{mode, betas, alphas, theta, bonferroni_n,
// sample_size, percentile_rank}, discrimination{desired_lift, w_d1, w_d2}.
std::string ObjectiveConfigToJson(const ObjectiveConfig& config);
ObjectiveConfig ObjectiveConfigFromJson(std::string_view text,
                                        ObjectiveConfig base = {});

std::string TrimaxConfigToJson(const TrimaxConfig& config,
                               bool include_threads = true);
TrimaxConfig TrimaxConfigFromJson(std::string_view text, TrimaxConfig base = {});

std::string TrigenConfigToJson(const TrigenConfig& config,
                               bool include_threads = true);
TrigenConfig TrigenConfigFromJson(std::string_view text, TrigenConfig base = {});

std::string PlantSpecToJson(const PlantSpec& spec);
PlantSpec PlantSpecFromJson(std::string_view text, PlantSpec base = {});

}  // namespace trimof

#endif  // TRIMOF_CONFIG_IO_H_
