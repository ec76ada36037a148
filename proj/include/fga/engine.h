// Copyright 2026 The FGA Robustness Authors
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

// Fairness/goodness fixed point of a weighted signed network.
//
//   g(v) = 1/indeg(v) * sum_{u in Pred(v)} f(u) * w(u,v)
//   f(u) = 1 - 1/outdeg(u) * sum_{v in Succ(u)} |w(u,v) - g(v)| / 2
//
// with g(v) = 1 when indeg(v) = 0 and f(u) = 1 when outdeg(u) = 0. Iteration
// starts from f = g = 1; one sweep is a full goodness pass followed by a full
// fairness pass. After t sweeps the distance to the limit is below 2^-t for
// fairness and 2^-(t-1) for goodness.

#ifndef FGA_ENGINE_H_
#define FGA_ENGINE_H_

#include <iosfwd>
#include <span>
#include <vector>

#include "fga/wsn.h"

namespace fga {

struct FgaConfig {
  int max_iterations = 100;
  double residual_tolerance = 1e-8;

  // Throws std::invalid_argument on max_iterations < 1 or a non-positive
  // tolerance.
  void Validate() const;
};

struct FgaScores {
  std::vector<double> fairness;
  std::vector<double> goodness;
  int iterations_run = 0;
  // Largest per-node change (fairness or goodness) in the last sweep.
  double max_residual = 0.0;

  std::size_t node_count() const { return fairness.size(); }
  bool Converged(const FgaConfig& cfg) const {
    return max_residual < cfg.residual_tolerance;
  }
};

// One goodness update of every node against a fixed fairness vector.
void GoodnessPass(const Wsn& g, std::span<const double> fairness,
                  std::span<double> goodness);
// One fairness update of every node against a fixed goodness vector.
void FairnessPass(const Wsn& g, std::span<const double> goodness,
                  std::span<double> fairness);

// Iterates from f = g = 1 until the residual drops below the tolerance or the
// iteration budget runs out. Never fails; inspect max_residual for
// convergence.
FgaScores ComputeFga(const Wsn& g, const FgaConfig& cfg = {});

// Exactly `sweeps` sweeps from f = g = 1, no early stop.
FgaScores RunSweeps(const Wsn& g, int sweeps);

// Same fixed point as ComputeFga(g, cfg), started from `warm`. `warm` may be
// shorter than the graph when nodes were appended since (Sybil injection);
// the new nodes start at f = g = 1. Throws std::invalid_argument when `warm`
// covers more nodes than `g` has.
FgaScores RecomputeAfter(const Wsn& g, const FgaScores& warm,
                         const FgaConfig& cfg = {});

// Predicted weight of (u, v): f(u) * g(v).
double PredictWeight(const FgaScores& scores, NodeId u, NodeId v);

// `node_label,fairness,goodness` rows with 12 significant digits.
void WriteScoresCsv(std::ostream& os, const Wsn& g, const FgaScores& scores);

}  // namespace fga

#endif  // FGA_ENGINE_H_
