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

#include "trimof/tensor.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "trimof/error.h"

namespace trimof {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kIoError, "cannot write " + path.string());
  }
  out << text;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      break;
    }
    fields.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

// Splits text into lines, dropping blank lines but remembering 1-based line
// numbers for diagnostics.
std::vector<std::pair<std::size_t, std::string_view>> Lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!Trim(line).empty()) lines.emplace_back(line_no, line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  // Strip a UTF-8 byte order mark from the header.
  if (!lines.empty() && lines.front().second.starts_with("\xEF\xBB\xBF")) {
    lines.front().second.remove_prefix(3);
  }
  return lines;
}

std::size_t ColumnIndex(const std::vector<std::string_view>& header,
                        const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw Error(ErrorKind::kParseError,
                "line 1: missing column '" + name + "'");
  }
  return static_cast<std::size_t>(it - header.begin());
}

double ParseDouble(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = field.data() + field.size();
  if (!field.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw Error(ErrorKind::kParseError,
                "line " + std::to_string(line_no) + ": cannot parse '" +
                    std::string(field) + "' as a number");
  }
  return value;
}

std::size_t Intern(std::string_view id, std::vector<std::string>& ids,
                   std::unordered_map<std::string, std::size_t>& index) {
  auto [it, inserted] = index.try_emplace(std::string(id), ids.size());
  if (inserted) ids.emplace_back(id);
  return it->second;
}

void AppendDouble(std::string& out, double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  out.append(buffer, ptr);
}

std::optional<std::size_t> Find(
    const std::unordered_map<std::string, std::size_t>& index,
    std::string_view id) {
  const auto it = index.find(std::string(id));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

}  // namespace

Dataset::Dataset(std::vector<std::string> observation_ids,
                 std::vector<std::string> variable_ids,
                 std::vector<std::string> context_ids,
                 std::vector<double> values)
    : observation_ids_(std::move(observation_ids)),
      variable_ids_(std::move(variable_ids)),
      context_ids_(std::move(context_ids)),
      values_(std::move(values)) {
  if (values_.size() !=
      observation_ids_.size() * variable_ids_.size() * context_ids_.size()) {
    throw Error(ErrorKind::kIncompleteTensor,
                "value count does not match axis lengths");
  }
  BuildIndexes();
}

void Dataset::BuildIndexes() {
  auto build = [](const std::vector<std::string>& ids,
                  std::unordered_map<std::string, std::size_t>& index,
                  const char* axis) {
    index.clear();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!index.emplace(ids[i], i).second) {
        throw Error(ErrorKind::kInvalidConfig,
                    std::string("duplicate ") + axis + " id '" + ids[i] + "'");
      }
    }
  };
  build(observation_ids_, observation_index_, "observation");
  build(variable_ids_, variable_index_, "variable");
  build(context_ids_, context_index_, "context");
}

const std::vector<std::string>& Dataset::labels() const {
  if (!labels_) {
    throw Error(ErrorKind::kMissingLabels, "dataset has no class labels");
  }
  return *labels_;
}

Dataset Dataset::WithLabels(std::vector<std::string> labels) const {
  if (labels.size() != num_observations()) {
    throw Error(ErrorKind::kLabelMismatch,
                "expected " + std::to_string(num_observations()) +
                    " labels, got " + std::to_string(labels.size()));
  }
  Dataset copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

Dataset Dataset::WithoutLabels() const {
  Dataset copy = *this;
  copy.labels_.reset();
  return copy;
}

Dataset Dataset::WithValues(std::vector<double> values) const {
  if (values.size() != values_.size()) {
    throw Error(ErrorKind::kIncompleteTensor,
                "replacement values have the wrong size");
  }
  Dataset copy = *this;
  copy.values_ = std::move(values);
  return copy;
}

std::optional<std::size_t> Dataset::ObservationIndex(
    std::string_view id) const {
  return Find(observation_index_, id);
}
std::optional<std::size_t> Dataset::VariableIndex(std::string_view id) const {
  return Find(variable_index_, id);
}
std::optional<std::size_t> Dataset::ContextIndex(std::string_view id) const {
  return Find(context_index_, id);
}

bool operator==(const Dataset& a, const Dataset& b) {
  return a.observation_ids_ == b.observation_ids_ &&
         a.variable_ids_ == b.variable_ids_ &&
         a.context_ids_ == b.context_ids_ && a.values_ == b.values_ &&
         a.labels_ == b.labels_;
}

Dataset ParseTensorCsv(std::string_view text, const CsvLayout& layout) {
  const auto lines = Lines(text);
  if (lines.empty()) {
    throw Error(ErrorKind::kIncompleteTensor, "empty tensor file");
  }
  const auto header = SplitFields(lines.front().second);
  const std::size_t obs_col = ColumnIndex(header, layout.observation_column);
  const std::size_t var_col = ColumnIndex(header, layout.variable_column);
  const std::size_t ctx_col = ColumnIndex(header, layout.context_column);
  const std::size_t val_col = ColumnIndex(header, layout.value_column);
  const std::size_t needed =
      std::max(std::max(obs_col, var_col), std::max(ctx_col, val_col)) + 1;

  std::vector<std::string> obs_ids, var_ids, ctx_ids;
  std::unordered_map<std::string, std::size_t> obs_index, var_index, ctx_index;
  struct Cell {
    std::size_t i, j, k;
    double value;
    std::size_t line_no;
  };
  std::vector<Cell> cells;
  cells.reserve(lines.size());
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto [line_no, line] = lines[r];
    const auto fields = SplitFields(line);
    if (fields.size() < needed) {
      throw Error(ErrorKind::kParseError,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields");
    }
    Cell cell;
    cell.i = Intern(fields[obs_col], obs_ids, obs_index);
    cell.j = Intern(fields[var_col], var_ids, var_index);
    cell.k = Intern(fields[ctx_col], ctx_ids, ctx_index);
    cell.value = ParseDouble(fields[val_col], line_no);
    cell.line_no = line_no;
    cells.push_back(cell);
  }

  const std::size_t n = obs_ids.size(), m = var_ids.size(), p = ctx_ids.size();
  if (n * m * p == 0) {
    throw Error(ErrorKind::kIncompleteTensor, "tensor has no cells");
  }
  std::vector<double> values(n * m * p, 0.0);
  std::vector<bool> seen(values.size(), false);
  for (const Cell& cell : cells) {
    const std::size_t offset = (cell.i * m + cell.j) * p + cell.k;
    if (seen[offset]) {
      throw Error(ErrorKind::kDuplicateCell,
                  "line " + std::to_string(cell.line_no) + ": cell (" +
                      obs_ids[cell.i] + "," + var_ids[cell.j] + "," +
                      ctx_ids[cell.k] + ") listed twice");
    }
    seen[offset] = true;
    values[offset] = cell.value;
  }
  if (cells.size() != values.size()) {
    const auto missing = std::find(seen.begin(), seen.end(), false) -
                         seen.begin();
    const std::size_t k = missing % p;
    const std::size_t j = (missing / p) % m;
    const std::size_t i = missing / (p * m);
    throw Error(ErrorKind::kIncompleteTensor,
                "cell (" + obs_ids[i] + "," + var_ids[j] + "," + ctx_ids[k] +
                    ") is missing; " + std::to_string(values.size() -
                                                      cells.size()) +
                    " cells absent");
  }
  return Dataset(std::move(obs_ids), std::move(var_ids), std::move(ctx_ids),
                 std::move(values));
}

Dataset LoadTensorCsv(const std::filesystem::path& path,
                      const CsvLayout& layout) {
  return ParseTensorCsv(ReadFile(path), layout);
}

std::vector<std::string> ParseLabels(std::string_view text,
                                     const Dataset& dataset) {
  const auto lines = Lines(text);
  const std::size_t n = dataset.num_observations();
  if (lines.empty()) {
    if (n == 0) return {};
    throw Error(ErrorKind::kLabelMismatch, "label file is empty");
  }
  const auto header = SplitFields(lines.front().second);
  std::size_t obs_col = 0, label_col = 1;
  try {
    obs_col = ColumnIndex(header, "obs");
    label_col = ColumnIndex(header, "label");
  } catch (const Error&) {
    throw Error(ErrorKind::kLabelMismatch,
                "label file header must contain 'obs' and 'label'");
  }
  std::vector<std::optional<std::string>> aligned(n);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto [line_no, line] = lines[r];
    const auto fields = SplitFields(line);
    if (fields.size() <= std::max(obs_col, label_col)) {
      throw Error(ErrorKind::kParseError,
                  "line " + std::to_string(line_no) + ": expected obs,label");
    }
    const auto index = dataset.ObservationIndex(fields[obs_col]);
    if (!index) {
      throw Error(ErrorKind::kLabelMismatch,
                  "line " + std::to_string(line_no) + ": unknown observation '" +
                      std::string(fields[obs_col]) + "'");
    }
    if (aligned[*index]) {
      throw Error(ErrorKind::kLabelMismatch,
                  "line " + std::to_string(line_no) + ": observation '" +
                      std::string(fields[obs_col]) + "' labeled twice");
    }
    aligned[*index] = std::string(fields[label_col]);
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!aligned[i]) {
      throw Error(ErrorKind::kLabelMismatch,
                  "observation '" + dataset.observation_ids()[i] +
                      "' has no label");
    }
    labels.push_back(std::move(*aligned[i]));
  }
  return labels;
}

std::vector<std::string> LoadLabels(const std::filesystem::path& path,
                                    const Dataset& dataset) {
  return ParseLabels(ReadFile(path), dataset);
}

std::string TensorToCsv(const Dataset& dataset) {
  std::string out = "obs,var,ctx,value\n";
  const auto& obs = dataset.observation_ids();
  const auto& var = dataset.variable_ids();
  const auto& ctx = dataset.context_ids();
  for (std::size_t i = 0; i < obs.size(); ++i) {
    for (std::size_t j = 0; j < var.size(); ++j) {
      for (std::size_t k = 0; k < ctx.size(); ++k) {
        out += obs[i];
        out += ',';
        out += var[j];
        out += ',';
        out += ctx[k];
        out += ',';
        AppendDouble(out, dataset.at(i, j, k));
        out += '\n';
      }
    }
  }
  return out;
}

std::string LabelsToCsv(const Dataset& dataset) {
  std::string out = "obs,label\n";
  const auto& labels = dataset.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += dataset.observation_ids()[i];
    out += ',';
    out += labels[i];
    out += '\n';
  }
  return out;
}

void WriteTensorCsv(const Dataset& dataset,
                    const std::filesystem::path& path) {
  WriteFile(path, TensorToCsv(dataset));
}

void WriteLabelsCsv(const Dataset& dataset,
                    const std::filesystem::path& path) {
  WriteFile(path, LabelsToCsv(dataset));
}

Dataset MinMaxScale(const Dataset& dataset) {
  const std::size_t n = dataset.num_observations();
  const std::size_t m = dataset.num_variables();
  const std::size_t p = dataset.num_contexts();
  std::vector<double> values(dataset.values().begin(), dataset.values().end());
  for (std::size_t j = 0; j < m; ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      for (double v : dataset.Series(i, j)) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    const double range = hi - lo;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < p; ++k) {
        double& v = values[dataset.Offset(i, j, k)];
        v = range > 0.0 ? std::clamp((v - lo) / range, 0.0, 1.0) : 0.0;
      }
    }
  }
  return dataset.WithValues(std::move(values));
}

Dataset Paa(const Dataset& dataset, std::size_t target_length) {
  const std::size_t p = dataset.num_contexts();
  if (target_length == 0 || target_length > p) {
    throw Error(ErrorKind::kInvalidTarget,
                "target length " + std::to_string(target_length) +
                    " outside [1, " + std::to_string(p) + "]");
  }
  if (target_length == p) return dataset;

  const std::size_t n = dataset.num_observations();
  const std::size_t m = dataset.num_variables();
  std::vector<std::size_t> bounds(target_length + 1);
  for (std::size_t f = 0; f <= target_length; ++f) {
    bounds[f] = p * f / target_length;
  }
  std::vector<double> values;
  values.reserve(n * m * target_length);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto series = dataset.Series(i, j);
      for (std::size_t f = 0; f < target_length; ++f) {
        double sum = 0.0;
        for (std::size_t k = bounds[f]; k < bounds[f + 1]; ++k) {
          sum += series[k];
        }
        values.push_back(sum / static_cast<double>(bounds[f + 1] - bounds[f]));
      }
    }
  }
  std::vector<std::string> frames(target_length);
  for (std::size_t f = 0; f < target_length; ++f) frames[f] = std::to_string(f);
  Dataset reduced(dataset.observation_ids(), dataset.variable_ids(),
                  std::move(frames), std::move(values));
  return dataset.has_labels() ? reduced.WithLabels(dataset.labels())
                              : reduced;
}

}  // namespace trimof
