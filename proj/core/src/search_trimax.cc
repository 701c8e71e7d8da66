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

#include "trimof/search_trimax.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trimof/config_io.h"
#include "trimof/error.h"
#include "trimof/evaluation.h"
#include "trimof/quality.h"

namespace trimof {
namespace {

using Contributions = std::array<std::vector<double>, 3>;

std::vector<std::size_t>& Dimension(Tricluster& t, int d) {
  return d == 0 ? t.observations : d == 1 ? t.variables : t.contexts;
}

const std::vector<std::size_t>& Dimension(const Tricluster& t, int d) {
  return d == 0 ? t.observations : d == 1 ? t.variables : t.contexts;
}

std::vector<std::size_t> Iota(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Tricluster WholeTensor(const Dataset& dataset) {
  return Tricluster{Iota(dataset.num_observations()),
                    Iota(dataset.num_variables()), Iota(dataset.num_contexts())};
}

// Greedy deletion and addition against one dataset and threshold.
class GreedySearch {
 public:
  GreedySearch(const Objective& objective, const TrimaxConfig& config,
               double delta, std::size_t round, const TrimaxObserver& observer)
      : objective_(objective),
        config_(config),
        delta_(delta),
        round_(round),
        observer_(observer),
        extent_{objective.dataset().num_observations(),
                objective.dataset().num_variables(),
                objective.dataset().num_contexts()} {}

  // Shrinks and regrows `t` in place. False when the threshold cannot be
  // reached without going below min_dims.
  bool Run(Tricluster& t) {
    MultipleDeletion(t);
    if (!SingleDeletion(t)) return false;
    Addition(t);
    return true;
  }

  bool SingleDeletion(Tricluster& t) {
    while (true) {
      const ObjectiveTerms terms = objective_.Evaluate(t);
      if (terms.score <= delta_) return true;
      const Contributions contributions = Contribute(t, terms.pqc);
      int best_dim = -1;
      std::size_t best_pos = 0;
      double best = -std::numeric_limits<double>::infinity();
      for (int d = 0; d < 3; ++d) {
        if (!CanShrink(t, d)) continue;
        for (std::size_t pos = 0; pos < contributions[d].size(); ++pos) {
          if (contributions[d][pos] > best) {
            best = contributions[d][pos];
            best_dim = d;
            best_pos = pos;
          }
        }
      }
      if (best_dim < 0) return false;
      auto& dim = Dimension(t, best_dim);
      dim.erase(dim.begin() + static_cast<std::ptrdiff_t>(best_pos));
      Notify(TrimaxPhase::kSingleDeletion, [&] {
        return objective_.Evaluate(t).score;
      });
    }
  }

 private:
  bool CanShrink(const Tricluster& t, int d) const {
    return Dimension(t, d).size() > config_.min_dims[d];
  }

  template <typename ScoreFn>
  void Notify(TrimaxPhase phase, ScoreFn&& score) const {
    if (observer_) observer_(round_, phase, score());
  }

  // Contribution of every element of `t` to its quality score `pqc`: the
  // slice residue for MSR, and 2 pqc - pqc(t without the element) for the
  // slope measures so that neutral elements sit at pqc, as with MSR.
  Contributions Contribute(const Tricluster& t, double pqc) const {
    const Dataset& data = objective_.dataset();
    if (objective_.config().pqc == QualityMeasure::kMsr) {
      MsrBreakdown breakdown = MsrContributions(data, t);
      return {std::move(breakdown.observations),
              std::move(breakdown.variables), std::move(breakdown.contexts)};
    }
    Contributions out;
    for (int d = 0; d < 3; ++d) {
      const std::size_t size = Dimension(t, d).size();
      out[d].assign(size, -std::numeric_limits<double>::infinity());
      if (!CanShrink(t, d)) continue;
      for (std::size_t pos = 0; pos < size; ++pos) {
        Tricluster without = t;
        auto& dim = Dimension(without, d);
        dim.erase(dim.begin() + static_cast<std::ptrdiff_t>(pos));
        try {
          out[d][pos] = 2.0 * pqc - objective_.Pqc(without);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kDegenerateProfile) throw;
        }
      }
    }
    return out;
  }

  // Drops every element contributing more than lambda times the quality
  // score, keeping the discriminative and significance terms fixed. A step
  // that would not lower the score is rejected, which ends the phase.
  void MultipleDeletion(Tricluster& t) {
    const bool mof = objective_.uses_mof();
    SupportTerms support;
    if (mof) support = objective_.Support(t);
    auto score_of = [&](double pqc) {
      return mof ? objective_.Combine(pqc, support) : pqc;
    };
    double pqc = objective_.Pqc(t);
    while (score_of(pqc) > delta_) {
      const Contributions contributions = Contribute(t, pqc);
      Tricluster next = t;
      bool removed = false;
      for (int d = 0; d < 3; ++d) {
        if (!CanShrink(t, d)) continue;
        const auto& dim = Dimension(t, d);
        std::vector<std::size_t> flagged;
        for (std::size_t pos = 0; pos < dim.size(); ++pos) {
          if (contributions[d][pos] > config_.lambda * pqc) {
            flagged.push_back(pos);
          }
        }
        const std::size_t room = dim.size() - config_.min_dims[d];
        if (flagged.size() > room) {
          std::stable_sort(flagged.begin(), flagged.end(),
                           [&](std::size_t a, std::size_t b) {
                             return contributions[d][a] > contributions[d][b];
                           });
          flagged.resize(room);
        }
        if (flagged.empty()) continue;
        std::vector<bool> drop(dim.size(), false);
        for (std::size_t pos : flagged) drop[pos] = true;
        auto& out = Dimension(next, d);
        out.clear();
        for (std::size_t pos = 0; pos < dim.size(); ++pos) {
          if (!drop[pos]) out.push_back(dim[pos]);
        }
        removed = true;
      }
      if (!removed) break;
      const double next_pqc = objective_.Pqc(next);
      if (!(next_pqc < pqc)) break;
      t = std::move(next);
      pqc = next_pqc;
      Notify(TrimaxPhase::kMultipleDeletion, [&] { return score_of(pqc); });
    }
  }

  // Adds contexts, then variables, then observations whenever the enlarged
  // tricluster stays within the threshold, until a full pass adds nothing.
  void Addition(Tricluster& t) {
    bool added = true;
    while (added) {
      added = false;
      for (int d = 2; d >= 0; --d) {
        for (std::size_t index = 0; index < extent_[d]; ++index) {
          auto& dim = Dimension(t, d);
          const auto where = std::lower_bound(dim.begin(), dim.end(), index);
          if (where != dim.end() && *where == index) continue;
          Tricluster candidate = t;
          auto& cdim = Dimension(candidate, d);
          cdim.insert(cdim.begin() + (where - dim.begin()), index);
          double score;
          try {
            score = objective_.Evaluate(candidate).score;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::kDegenerateProfile) throw;
            continue;
          }
          if (score <= delta_) {
            t = std::move(candidate);
            added = true;
            Notify(TrimaxPhase::kAddition, [&] { return score; });
          }
        }
      }
    }
  }

  const Objective& objective_;
  const TrimaxConfig& config_;
  double delta_;
  std::size_t round_;
  const TrimaxObserver& observer_;
  std::array<std::size_t, 3> extent_;
};

bool AllCovered(const Dataset& dataset, const Tricluster& t,
                const std::vector<bool>& covered) {
  for (std::size_t i : t.observations) {
    for (std::size_t j : t.variables) {
      for (std::size_t k : t.contexts) {
        if (!covered[dataset.Offset(i, j, k)]) return false;
      }
    }
  }
  return true;
}

}  // namespace

void TrimaxConfig::Validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorKind::kInvalidConfig, "delta must be positive");
  }
  if (!(lambda > 1.0) || !std::isfinite(lambda)) {
    throw Error(ErrorKind::kInvalidConfig, "lambda must exceed 1");
  }
  if (max_triclusters == 0) {
    throw Error(ErrorKind::kInvalidConfig, "max_triclusters must be positive");
  }
  for (std::size_t d : min_dims) {
    if (d == 0) {
      throw Error(ErrorKind::kInvalidConfig, "min_dims must be positive");
    }
  }
  objective.Validate();
}

Solution RunTrimax(const Dataset& dataset, const TrimaxConfig& config,
                   const TrimaxObserver& observer) {
  config.Validate();
  const std::array<std::size_t, 3> extent = {dataset.num_observations(),
                                             dataset.num_variables(),
                                             dataset.num_contexts()};
  for (int d = 0; d < 3; ++d) {
    if (extent[d] < config.min_dims[d]) {
      throw Error(ErrorKind::kDatasetTooSmall,
                  "dataset is smaller than min_dims");
    }
  }
  const Objective original(dataset, config.objective);

  double delta = config.delta;
  if (original.uses_mof()) {
    MofConfig mof = config.objective.mof;
    mof.seed = config.seed;
    delta = RecalibrateThreshold(config.delta, mof, config.threads);
  }

  Solution solution;
  solution.meta.algo = "trimax";
  solution.meta.pqc = config.objective.pqc;
  solution.meta.mof_mode = config.objective.mof.mode;
  solution.meta.seed = config.seed;
  solution.meta.config_hash = Fnv1aHex(TrimaxConfigToJson(config, false));
  solution.meta.delta = config.delta;
  solution.meta.delta_effective = delta;

  std::vector<double> values(dataset.values().begin(), dataset.values().end());
  std::vector<bool> covered(values.size(), false);
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (std::size_t round = 0; round < config.max_triclusters; ++round) {
    const Dataset working = round == 0 ? dataset : dataset.WithValues(values);
    const Objective objective(working, config.objective);
    Tricluster t = WholeTensor(dataset);
    if (!GreedySearch(objective, config, delta, round, observer).Run(t)) break;
    if (round > 0 &&
        !GreedySearch(original, config, delta, round, observer)
             .SingleDeletion(t)) {
      break;
    }
    if (round > 0 && AllCovered(dataset, t, covered)) break;
    for (std::size_t i : t.observations) {
      for (std::size_t j : t.variables) {
        for (std::size_t k : t.contexts) {
          const std::size_t offset = dataset.Offset(i, j, k);
          values[offset] = unit(rng);
          covered[offset] = true;
        }
      }
    }
    solution.triclusters.push_back(
        ScoreTricluster(dataset, t, config.objective));
  }
  return solution;
}

}  // namespace trimof
