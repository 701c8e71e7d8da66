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

#ifndef TRIMOF_SRC_JSON_IO_H_
#define TRIMOF_SRC_JSON_IO_H_

// Internal JSON helpers shared by the serialization code. nlohmann::json is a
// private dependency of the core library and never appears in public headers.

#include "json.hpp"
#include "trimof/patterns.h"
#include "trimof/tensor.h"

namespace trimof::internal {

nlohmann::json TriclusterToJsonValue(const Dataset& dataset,
                                     const Tricluster& t);
Tricluster TriclusterFromJsonValue(const Dataset& dataset,
                                   const nlohmann::json& value);

}  // namespace trimof::internal

#endif  // TRIMOF_SRC_JSON_IO_H_
