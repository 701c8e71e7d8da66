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

#ifndef TRIMOF_ERROR_H_
#define TRIMOF_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace trimof {

// Failure categories surfaced by the library. The CLI prints the name of the
// kind verbatim, so the enumerator spelling is part of the external contract.
enum class ErrorKind {
  kDuplicateCell,
  kIncompleteTensor,
  kParseError,
  kLabelMismatch,
  kInvalidTarget,
  kInvalidTricluster,
  kUnknownOutcome,
  kEmptyTricluster,
  kDegenerateProfile,
  kInvalidSupport,
  kUndefinedRule,
  kMissingLabels,
  kInvalidScore,
  kNoRecalibrationNeeded,
  kDatasetTooSmall,
  kNotEnoughProfiles,
  kDegenerateSample,
  kEmptySolution,
  kInvalidSpec,
  kInvalidConfig,
  kIoError,
};

std::string_view ErrorName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return ErrorName(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace trimof

#endif  // TRIMOF_ERROR_H_
