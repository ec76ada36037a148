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

// Attacks on the goodness of a single target node.
//
// Direct: every attacker rates the target with -1.
// Indirect (greedy): attackers, taken in descending fairness order, each add
//   one edge (a, n2) with weight +1 or -1, where n2 is a successor of some
//   predecessor of the target (n2 != target), choosing the candidate that
//   minimises the target's recomputed goodness.
// Indirect (scaled): as greedy, but each pick is replicated by a batch of
//   min(scale * indeg(n2), max_edges, remaining) attackers.
// Mixed: a direct attack followed by a greedy indirect attack.

#ifndef FGA_ATTACKS_H_
#define FGA_ATTACKS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fga/engine.h"
#include "fga/wsn.h"

namespace fga {

struct AttackMove {
  enum class Kind { kEdgeAddition, kWeightUpdate };

  Kind kind = Kind::kEdgeAddition;
  NodeId attacker = 0;
  NodeId rated = 0;
  double weight = 0.0;

  friend bool operator==(const AttackMove&, const AttackMove&) = default;
};

struct AttackOutcome {
  std::vector<AttackMove> moves;
  FgaScores before;
  FgaScores after;
  std::vector<NodeId> targets;
  // g_after(t) - g_before(t), per entry of `targets`.
  std::vector<double> delta_goodness;
  // Set when the indirect search ran out of candidate moves early.
  bool exhausted = false;
};

struct AttackResult {
  Wsn graph;
  AttackOutcome outcome;
};

struct AttackConfig {
  FgaConfig fga{.max_iterations = 200, .residual_tolerance = 1e-10};
  // Recompute from f = g = 1 after every move instead of warm-starting.
  bool cold = false;
  // Workers for candidate scans. 0 picks the hardware concurrency.
  unsigned threads = 1;
};

class AttackError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adds (attacker, rated, w), or rewrites the weight if the edge exists.
AttackMove ApplyMove(Wsn& g, NodeId attacker, NodeId rated, double w);

// Recomputes scores after a change, honouring cfg.cold.
FgaScores Rescore(const Wsn& g, const FgaScores& warm, const AttackConfig& cfg);

// Attackers sorted by descending fairness, ties by ascending id.
std::vector<NodeId> SortByFairness(std::span<const NodeId> attackers,
                                   const FgaScores& scores);

AttackResult DirectAttack(const Wsn& g, std::span<const NodeId> attackers,
                          NodeId target, const AttackConfig& cfg = {});

// Successors of the target's predecessors, without the target itself;
// sorted and deduplicated.
std::vector<NodeId> IndirectCandidates(const Wsn& g, NodeId target);

struct IndirectChoice {
  NodeId rated = 0;
  double weight = 0.0;
  // Target goodness after the move.
  double target_goodness = 0.0;
};

// Scans every candidate (n2, w), w in {+1, -1}, for `attacker` and returns
// the one minimising the target's goodness. Ties go to the smaller n2, then
// to w = +1. nullopt when there is no admissible candidate.
std::optional<IndirectChoice> BestIndirectMove(const Wsn& g,
                                               const FgaScores& current,
                                               NodeId attacker, NodeId target,
                                               const AttackConfig& cfg = {});

AttackResult IndirectAttackGreedy(const Wsn& g,
                                  std::span<const NodeId> attackers,
                                  NodeId target, const AttackConfig& cfg = {});

struct ScaledParams {
  std::size_t scale = 5;
  std::size_t max_edges = 10;
};

// min(scale * indeg, max_edges, remaining).
std::size_t ScaledBatchSize(std::size_t indeg, std::size_t remaining,
                            const ScaledParams& params);

AttackResult IndirectAttackScaled(const Wsn& g,
                                  std::span<const NodeId> attackers,
                                  NodeId target, const ScaledParams& params = {},
                                  const AttackConfig& cfg = {});

struct MixedResult {
  AttackResult result;
  // Change after the direct moves only.
  double delta_direct = 0.0;
  // delta_total - delta_direct.
  double delta_indirect = 0.0;
  double delta_total = 0.0;
  std::size_t direct_moves = 0;
};

// The two attacker groups must be disjoint.
MixedResult MixedAttack(const Wsn& g, std::span<const NodeId> direct_attackers,
                        std::span<const NodeId> indirect_attackers,
                        NodeId target, const AttackConfig& cfg = {});

// Splits `attackers` as the first k1 direct and the next k2 indirect.
MixedResult MixedAttack(const Wsn& g, std::span<const NodeId> attackers,
                        NodeId target, std::size_t k1, std::size_t k2,
                        const AttackConfig& cfg = {});

// Appends a fresh node with the single edge (s, rated, w); returns s.
NodeId InjectSybil(Wsn& g, NodeId rated, double w);

}  // namespace fga

#endif  // FGA_ATTACKS_H_
