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

#include "trimof/mof.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "parallel.h"
#include "trimof/error.h"

namespace trimof {
namespace {

constexpr std::size_t kChunkSize = 4096;

// Uniform double on the open interval (0, 1) from the top 53 bits.
double OpenUniform(std::mt19937_64& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

void RequireFinite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kInvalidScore, std::string(what) + " is not finite");
  }
}

}  // namespace

std::string_view MofModeName(MofMode mode) {
  switch (mode) {
    case MofMode::kOriginal: return "none";
    case MofMode::kAdditive: return "add";
    case MofMode::kMultiplicative: return "mul";
  }
  return "none";
}

MofMode ParseMofMode(std::string_view name) {
  if (name == "none" || name == "original") return MofMode::kOriginal;
  if (name == "add" || name == "additive") return MofMode::kAdditive;
  if (name == "mul" || name == "multiplicative") {
    return MofMode::kMultiplicative;
  }
  throw Error(ErrorKind::kInvalidConfig,
              "unknown MOF mode '" + std::string(name) +
                  "' (expected none, add or mul)");
}

std::size_t MofConfig::PercentileRank() const {
  if (percentile_rank) return *percentile_rank;
  return std::max<std::size_t>(1, (sample_size + 19) / 20);
}

void MofConfig::Validate() const {
  significance.Validate();
  for (double alpha : alphas) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      throw Error(ErrorKind::kInvalidConfig, "alphas must be positive");
    }
  }
  for (double beta : betas) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
      throw Error(ErrorKind::kInvalidConfig, "betas must be non-negative");
    }
  }
  if (sample_size == 0) {
    throw Error(ErrorKind::kInvalidConfig, "sample size must be positive");
  }
  const std::size_t rank = PercentileRank();
  if (rank < 1 || rank > sample_size) {
    throw Error(ErrorKind::kInvalidConfig,
                "percentile rank outside [1, sample size]");
  }
}

double MofScore(double pqc, double dpc, double ssc, const MofConfig& config) {
  RequireFinite(pqc, "pqc");
  RequireFinite(dpc, "dpc");
  RequireFinite(ssc, "ssc");
  if (pqc < 0.0) {
    throw Error(ErrorKind::kInvalidScore, "pqc must be non-negative");
  }
  if (dpc < 0.0 || ssc < 0.0) {
    throw Error(ErrorKind::kInvalidScore, "dpc and ssc must be non-negative");
  }
  const auto& a = config.alphas;
  const auto& b = config.betas;
  switch (config.mode) {
    case MofMode::kOriginal:
      return pqc;
    case MofMode::kAdditive:
      return b[0] * std::pow(pqc, a[0]) + b[1] * std::pow(dpc * pqc, a[1]) +
             b[2] * std::pow(ssc * pqc, a[2]);
    case MofMode::kMultiplicative:
      return std::pow(pqc, a[0]) * std::pow(dpc, a[1]) * std::pow(ssc, a[2]);
  }
  return pqc;
}

std::vector<double> SampleMofDistribution(double pqc, const MofConfig& config,
                                          unsigned threads) {
  config.Validate();
  const std::size_t m = config.sample_size;
  const double theta = config.significance.EffectiveTheta();
  const std::size_t chunks = (m + kChunkSize - 1) / kChunkSize;
  std::vector<double> samples(m);

  internal::ParallelFor(chunks, threads, [&](std::size_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                      static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(chunk),
                      static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 engine(seq);
    const std::size_t begin = chunk * kChunkSize;
    const std::size_t end = std::min(m, begin + kChunkSize);
    for (std::size_t s = begin; s < end; ++s) {
      const double dpc = OpenUniform(engine);
      const bool below = OpenUniform(engine) < 0.5;
      const double u = OpenUniform(engine);
      const double p_value = below ? theta * u : theta + (1.0 - theta) * u;
      samples[s] = MofScore(pqc, dpc, Ssc(p_value, theta), config);
    }
  });
  std::sort(samples.begin(), samples.end());
  return samples;
}

double RecalibrateThreshold(double delta_user, const MofConfig& config,
                            unsigned threads) {
  if (config.mode == MofMode::kOriginal) {
    throw Error(ErrorKind::kNoRecalibrationNeeded,
                "the original objective keeps the user threshold");
  }
  if (!(delta_user > 0.0) || !std::isfinite(delta_user)) {
    throw Error(ErrorKind::kInvalidConfig, "delta must be positive");
  }
  const auto samples = SampleMofDistribution(delta_user, config, threads);
  return samples[config.PercentileRank() - 1];
}

}  // namespace trimof
