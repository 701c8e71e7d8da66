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

#ifndef TRIMOF_TENSOR_H_
#define TRIMOF_TENSOR_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace trimof {

// Dense three-way tensor of observations x variables x contexts with axis
// labels and an optional categorical outcome per observation.
//
// Values are stored row-major: index (i, j, k) lives at (i * m + j) * p + k,
// so a single (observation, variable) series is contiguous along contexts.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<std::string> observation_ids,
          std::vector<std::string> variable_ids,
          std::vector<std::string> context_ids, std::vector<double> values);

  std::size_t num_observations() const { return observation_ids_.size(); }
  std::size_t num_variables() const { return variable_ids_.size(); }
  std::size_t num_contexts() const { return context_ids_.size(); }
  std::size_t size() const { return values_.size(); }

  double at(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[Offset(i, j, k)];
  }
  std::size_t Offset(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * num_variables() + j) * num_contexts() + k;
  }
  // Contiguous context series for observation i, variable j.
  std::span<const double> Series(std::size_t i, std::size_t j) const {
    return {values_.data() + Offset(i, j, 0), num_contexts()};
  }
  std::span<const double> values() const { return values_; }

  const std::vector<std::string>& observation_ids() const {
    return observation_ids_;
  }
  const std::vector<std::string>& variable_ids() const { return variable_ids_; }
  const std::vector<std::string>& context_ids() const { return context_ids_; }

  bool has_labels() const { return labels_.has_value(); }
  // Throws Error(kMissingLabels) when no labels are attached.
  const std::vector<std::string>& labels() const;
  // Returns a copy with labels attached; throws kLabelMismatch on a length
  // mismatch.
  Dataset WithLabels(std::vector<std::string> labels) const;
  Dataset WithoutLabels() const;
  // Same axes and labels, new values (must have identical size).
  Dataset WithValues(std::vector<double> values) const;

  // Index lookup by axis id; std::nullopt when the id is unknown.
  std::optional<std::size_t> ObservationIndex(std::string_view id) const;
  std::optional<std::size_t> VariableIndex(std::string_view id) const;
  std::optional<std::size_t> ContextIndex(std::string_view id) const;

  friend bool operator==(const Dataset& a, const Dataset& b);

 private:
  void BuildIndexes();

  std::vector<std::string> observation_ids_;
  std::vector<std::string> variable_ids_;
  std::vector<std::string> context_ids_;
  std::vector<double> values_;
  std::optional<std::vector<std::string>> labels_;
  std::unordered_map<std::string, std::size_t> observation_index_;
  std::unordered_map<std::string, std::size_t> variable_index_;
  std::unordered_map<std::string, std::size_t> context_index_;
};

// Column names used to read a long-form tensor CSV.
struct CsvLayout {
  std::string observation_column = "obs";
  std::string variable_column = "var";
  std::string context_column = "ctx";
  std::string value_column = "value";
};

// Reads a long-form CSV with one row per cell. Axes are ordered by first
// appearance. Throws kDuplicateCell, kIncompleteTensor or kParseError (the
// message carries the 1-based line number).
Dataset LoadTensorCsv(const std::filesystem::path& path,
                      const CsvLayout& layout = {});
Dataset ParseTensorCsv(std::string_view text, const CsvLayout& layout = {});

// Reads an `obs,label` CSV and aligns it to the observation order of
// `dataset`. Throws kLabelMismatch for unknown, duplicated or missing ids.
std::vector<std::string> LoadLabels(const std::filesystem::path& path,
                                    const Dataset& dataset);
std::vector<std::string> ParseLabels(std::string_view text,
                                     const Dataset& dataset);

// Canonical serialization: header `obs,var,ctx,value`, cells in (i, j, k)
// order, values printed with round-trip precision.
std::string TensorToCsv(const Dataset& dataset);
std::string LabelsToCsv(const Dataset& dataset);
void WriteTensorCsv(const Dataset& dataset, const std::filesystem::path& path);
void WriteLabelsCsv(const Dataset& dataset, const std::filesystem::path& path);

// Per-variable min-max scaling into [0, 1]; constant variables map to 0.
Dataset MinMaxScale(const Dataset& dataset);

// Piecewise aggregate approximation of every (observation, variable) series
// down to `target_length` frames. Frame f averages the source window
// [floor(p * f / target), floor(p * (f + 1) / target)). Throws kInvalidTarget
// unless 1 <= target_length <= p.
Dataset Paa(const Dataset& dataset, std::size_t target_length);

}  // namespace trimof

#endif  // TRIMOF_TENSOR_H_
