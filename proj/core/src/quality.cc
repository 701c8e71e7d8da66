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

#include "trimof/quality.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "trimof/error.h"

namespace trimof {
namespace {

void RequireNonEmpty(const Tricluster& t) {
  if (t.observations.empty() || t.variables.empty() || t.contexts.empty()) {
    throw Error(ErrorKind::kEmptyTricluster, "tricluster has an empty axis");
  }
}

// Dense copy of the tricluster cells, indexed [ii][jj][kk].
struct SubTensor {
  std::size_t ni, nj, nk;
  std::vector<double> values;

  double at(std::size_t ii, std::size_t jj, std::size_t kk) const {
    return values[(ii * nj + jj) * nk + kk];
  }
};

SubTensor Extract(const Dataset& dataset, const Tricluster& t) {
  SubTensor sub{t.observations.size(), t.variables.size(), t.contexts.size(),
                {}};
  sub.values.reserve(sub.ni * sub.nj * sub.nk);
  for (std::size_t i : t.observations) {
    for (std::size_t j : t.variables) {
      const auto series = dataset.Series(i, j);
      for (std::size_t k : t.contexts) sub.values.push_back(series[k]);
    }
  }
  return sub;
}

struct Means {
  std::vector<double> obs, var, ctx;
  double grand = 0.0;
};

Means ComputeMeans(const SubTensor& s) {
  Means means{std::vector<double>(s.ni, 0.0), std::vector<double>(s.nj, 0.0),
              std::vector<double>(s.nk, 0.0), 0.0};
  for (std::size_t ii = 0; ii < s.ni; ++ii) {
    for (std::size_t jj = 0; jj < s.nj; ++jj) {
      for (std::size_t kk = 0; kk < s.nk; ++kk) {
        const double v = s.at(ii, jj, kk);
        means.obs[ii] += v;
        means.var[jj] += v;
        means.ctx[kk] += v;
        means.grand += v;
      }
    }
  }
  for (double& v : means.obs) v /= static_cast<double>(s.nj * s.nk);
  for (double& v : means.var) v /= static_cast<double>(s.ni * s.nk);
  for (double& v : means.ctx) v /= static_cast<double>(s.ni * s.nj);
  means.grand /= static_cast<double>(s.ni * s.nj * s.nk);
  return means;
}

// Mean absolute pairwise difference of `angles`, using the sorted-prefix
// identity sum_{u<v} |x_u - x_v| = sum_r (2r - n + 1) x_(r).
double MeanPairwiseAbsDiff(std::vector<double>& angles) {
  const std::size_t n = angles.size();
  if (n < 2) return 0.0;
  std::sort(angles.begin(), angles.end());
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    sum += (2.0 * static_cast<double>(r) - static_cast<double>(n) + 1.0) *
           angles[r];
  }
  return sum / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

// Profiles of one view as a dense row-major matrix (profiles x points).
struct View {
  std::size_t profiles;
  std::size_t length;
  std::vector<double> points;

  const double* profile(std::size_t u) const {
    return points.data() + u * length;
  }
};

std::array<View, 3> BuildViews(const SubTensor& s) {
  if (s.nj * s.nk < 2 || s.ni * s.nj < 2) {
    throw Error(ErrorKind::kDegenerateProfile,
                "profiles need at least two points");
  }
  View ijk{s.ni, s.nj * s.nk, {}};
  View ikj{s.ni, s.nk * s.nj, {}};
  View kij{s.nk, s.ni * s.nj, {}};
  ijk.points.reserve(s.values.size());
  ikj.points.reserve(s.values.size());
  kij.points.reserve(s.values.size());
  for (std::size_t ii = 0; ii < s.ni; ++ii) {
    for (std::size_t jj = 0; jj < s.nj; ++jj) {
      for (std::size_t kk = 0; kk < s.nk; ++kk) {
        ijk.points.push_back(s.at(ii, jj, kk));
      }
    }
    for (std::size_t kk = 0; kk < s.nk; ++kk) {
      for (std::size_t jj = 0; jj < s.nj; ++jj) {
        ikj.points.push_back(s.at(ii, jj, kk));
      }
    }
  }
  for (std::size_t kk = 0; kk < s.nk; ++kk) {
    for (std::size_t ii = 0; ii < s.ni; ++ii) {
      for (std::size_t jj = 0; jj < s.nj; ++jj) {
        kij.points.push_back(s.at(ii, jj, kk));
      }
    }
  }
  return {std::move(ijk), std::move(ikj), std::move(kij)};
}

double LeastSquaresSlope(const double* y, std::size_t length) {
  const double x_mean = (static_cast<double>(length) - 1.0) / 2.0;
  double y_mean = 0.0;
  for (std::size_t x = 0; x < length; ++x) y_mean += y[x];
  y_mean /= static_cast<double>(length);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t x = 0; x < length; ++x) {
    const double dx = static_cast<double>(x) - x_mean;
    sxy += dx * (y[x] - y_mean);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double LslView(const View& view) {
  std::vector<double> angles(view.profiles);
  for (std::size_t u = 0; u < view.profiles; ++u) {
    angles[u] = std::atan(LeastSquaresSlope(view.profile(u), view.length));
  }
  return MeanPairwiseAbsDiff(angles) / std::numbers::pi;
}

double MslView(const View& view) {
  if (view.profiles < 2) return 0.0;
  const std::size_t segments = view.length - 1;
  std::vector<double> angles(view.profiles);
  double total = 0.0;
  for (std::size_t s = 0; s < segments; ++s) {
    for (std::size_t u = 0; u < view.profiles; ++u) {
      const double* y = view.profile(u);
      angles[u] = std::atan(y[s + 1] - y[s]);
    }
    total += MeanPairwiseAbsDiff(angles);
  }
  return total / static_cast<double>(segments) / std::numbers::pi;
}

}  // namespace

std::string_view QualityMeasureName(QualityMeasure measure) {
  switch (measure) {
    case QualityMeasure::kMsr: return "msr";
    case QualityMeasure::kLsl: return "lsl";
    case QualityMeasure::kMsl: return "msl";
  }
  return "msr";
}

QualityMeasure ParseQualityMeasure(std::string_view name) {
  if (name == "msr") return QualityMeasure::kMsr;
  if (name == "lsl") return QualityMeasure::kLsl;
  if (name == "msl") return QualityMeasure::kMsl;
  throw Error(ErrorKind::kInvalidConfig,
              "unknown quality measure '" + std::string(name) +
                  "' (expected msr, lsl or msl)");
}

double Msr(const Dataset& dataset, const Tricluster& t) {
  RequireNonEmpty(t);
  const SubTensor s = Extract(dataset, t);
  const Means means = ComputeMeans(s);
  double sum = 0.0;
  for (std::size_t ii = 0; ii < s.ni; ++ii) {
    for (std::size_t jj = 0; jj < s.nj; ++jj) {
      for (std::size_t kk = 0; kk < s.nk; ++kk) {
        const double r = s.at(ii, jj, kk) - means.obs[ii] - means.var[jj] -
                         means.ctx[kk] + 2.0 * means.grand;
        sum += r * r;
      }
    }
  }
  return sum / static_cast<double>(s.values.size());
}

MsrBreakdown MsrContributions(const Dataset& dataset, const Tricluster& t) {
  RequireNonEmpty(t);
  const SubTensor s = Extract(dataset, t);
  const Means means = ComputeMeans(s);
  MsrBreakdown out{0.0, std::vector<double>(s.ni, 0.0),
                   std::vector<double>(s.nj, 0.0),
                   std::vector<double>(s.nk, 0.0)};
  for (std::size_t ii = 0; ii < s.ni; ++ii) {
    for (std::size_t jj = 0; jj < s.nj; ++jj) {
      for (std::size_t kk = 0; kk < s.nk; ++kk) {
        const double r = s.at(ii, jj, kk) - means.obs[ii] - means.var[jj] -
                         means.ctx[kk] + 2.0 * means.grand;
        const double r2 = r * r;
        out.score += r2;
        out.observations[ii] += r2;
        out.variables[jj] += r2;
        out.contexts[kk] += r2;
      }
    }
  }
  out.score /= static_cast<double>(s.values.size());
  for (double& v : out.observations) v /= static_cast<double>(s.nj * s.nk);
  for (double& v : out.variables) v /= static_cast<double>(s.ni * s.nk);
  for (double& v : out.contexts) v /= static_cast<double>(s.ni * s.nj);
  return out;
}

double Lsl(const Dataset& dataset, const Tricluster& t) {
  RequireNonEmpty(t);
  const auto views = BuildViews(Extract(dataset, t));
  return (LslView(views[0]) + LslView(views[1]) + LslView(views[2])) / 3.0;
}

double Msl(const Dataset& dataset, const Tricluster& t) {
  RequireNonEmpty(t);
  const auto views = BuildViews(Extract(dataset, t));
  return (MslView(views[0]) + MslView(views[1]) + MslView(views[2])) / 3.0;
}

double EvaluatePqc(QualityMeasure measure, const Dataset& dataset,
                   const Tricluster& t) {
  switch (measure) {
    case QualityMeasure::kMsr: return Msr(dataset, t);
    case QualityMeasure::kLsl: return Lsl(dataset, t);
    case QualityMeasure::kMsl: return Msl(dataset, t);
  }
  return Msr(dataset, t);
}

}  // namespace trimof
