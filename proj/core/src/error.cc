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

#include "trimof/error.h"

namespace trimof {

std::string_view ErrorName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDuplicateCell: return "DuplicateCell";
    case ErrorKind::kIncompleteTensor: return "IncompleteTensor";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kLabelMismatch: return "LabelMismatch";
    case ErrorKind::kInvalidTarget: return "InvalidTarget";
    case ErrorKind::kInvalidTricluster: return "InvalidTricluster";
    case ErrorKind::kUnknownOutcome: return "UnknownOutcome";
    case ErrorKind::kEmptyTricluster: return "EmptyTricluster";
    case ErrorKind::kDegenerateProfile: return "DegenerateProfile";
    case ErrorKind::kInvalidSupport: return "InvalidSupport";
    case ErrorKind::kUndefinedRule: return "UndefinedRule";
    case ErrorKind::kMissingLabels: return "MissingLabels";
    case ErrorKind::kInvalidScore: return "InvalidScore";
    case ErrorKind::kNoRecalibrationNeeded: return "NoRecalibrationNeeded";
    case ErrorKind::kDatasetTooSmall: return "DatasetTooSmall";
    case ErrorKind::kNotEnoughProfiles: return "NotEnoughProfiles";
    case ErrorKind::kDegenerateSample: return "DegenerateSample";
    case ErrorKind::kEmptySolution: return "EmptySolution";
    case ErrorKind::kInvalidSpec: return "InvalidSpec";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorName(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace trimof
