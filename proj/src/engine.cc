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

#include "fga/engine.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fga {
namespace {

double MaxAbsDiff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

// Runs sweeps on `scores` in place. Stops early only when `tolerance` > 0.
void Iterate(const Wsn& g, FgaScores& scores, int max_sweeps,
             double tolerance) {
  std::vector<double> next_g(g.node_count());
  std::vector<double> next_f(g.node_count());
  for (int t = 0; t < max_sweeps; ++t) {
    GoodnessPass(g, scores.fairness, next_g);
    FairnessPass(g, next_g, next_f);
    scores.max_residual = std::max(MaxAbsDiff(next_g, scores.goodness),
                                   MaxAbsDiff(next_f, scores.fairness));
    scores.goodness.swap(next_g);
    scores.fairness.swap(next_f);
    ++scores.iterations_run;
    if (tolerance > 0.0 && scores.max_residual < tolerance) break;
  }
}

FgaScores AllOnes(std::size_t n) {
  FgaScores s;
  s.fairness.assign(n, 1.0);
  s.goodness.assign(n, 1.0);
  return s;
}

}  // namespace

void FgaConfig::Validate() const {
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be at least 1");
  }
  if (!(residual_tolerance > 0.0)) {
    throw std::invalid_argument("residual_tolerance must be positive");
  }
}

void GoodnessPass(const Wsn& g, std::span<const double> fairness,
                  std::span<double> goodness) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto in = g.InArcs(v);
    if (in.empty()) {
      goodness[v] = 1.0;
      continue;
    }
    double sum = 0.0;
    for (const Arc& a : in) sum += fairness[a.node] * a.weight;
    goodness[v] = sum / static_cast<double>(in.size());
  }
}

void FairnessPass(const Wsn& g, std::span<const double> goodness,
                  std::span<double> fairness) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto out = g.OutArcs(u);
    if (out.empty()) {
      fairness[u] = 1.0;
      continue;
    }
    double err = 0.0;
    for (const Arc& a : out) err += std::abs(a.weight - goodness[a.node]);
    fairness[u] = 1.0 - err / (2.0 * static_cast<double>(out.size()));
  }
}

FgaScores ComputeFga(const Wsn& g, const FgaConfig& cfg) {
  cfg.Validate();
  FgaScores s = AllOnes(g.node_count());
  Iterate(g, s, cfg.max_iterations, cfg.residual_tolerance);
  return s;
}

FgaScores RunSweeps(const Wsn& g, int sweeps) {
  FgaScores s = AllOnes(g.node_count());
  Iterate(g, s, sweeps, 0.0);
  return s;
}

FgaScores RecomputeAfter(const Wsn& g, const FgaScores& warm,
                         const FgaConfig& cfg) {
  cfg.Validate();
  if (warm.fairness.size() != warm.goodness.size() ||
      warm.node_count() > g.node_count()) {
    throw std::invalid_argument(
        "warm scores do not match the graph's node set");
  }
  FgaScores s;
  s.fairness = warm.fairness;
  s.goodness = warm.goodness;
  s.fairness.resize(g.node_count(), 1.0);
  s.goodness.resize(g.node_count(), 1.0);
  Iterate(g, s, cfg.max_iterations, cfg.residual_tolerance);
  return s;
}

double PredictWeight(const FgaScores& scores, NodeId u, NodeId v) {
  if (u >= scores.node_count() || v >= scores.node_count()) {
    throw GraphError(GraphError::Kind::kUnknownNode,
                     "unknown node in prediction (" + std::to_string(u) +
                         "," + std::to_string(v) + ")");
  }
  return scores.fairness[u] * scores.goodness[v];
}

void WriteScoresCsv(std::ostream& os, const Wsn& g, const FgaScores& scores) {
  os << "node_label,fairness,goodness\n";
  char buf[64];
  for (NodeId v = 0; v < g.node_count(); ++v) {
    os << g.Label(v);
    std::snprintf(buf, sizeof(buf), ",%.12g", scores.fairness[v]);
    os << buf;
    std::snprintf(buf, sizeof(buf), ",%.12g\n", scores.goodness[v]);
    os << buf;
  }
}

}  // namespace fga
