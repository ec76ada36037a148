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

// Exact decision procedure for the budgeted manipulation problems on tiny
// instances:
//
//   node targets (DNR / INR): push g(v) to or below (above) the threshold
//     for every target v;
//   pair targets (DMT / IMT): push either f(u) g(v) or f(v) g(u) to or below
//     (above) the threshold for every unlinked pair {u, v};
//
// using at most `budget` moves, each an attacker rating an intermediary
// (edge addition or weight update). Both families are NP-hard in general, so
// the solver simply enumerates every move set and refuses large instances.

#ifndef FGA_EXHAUSTIVE_H_
#define FGA_EXHAUSTIVE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fga/attacks.h"
#include "fga/wsn.h"

namespace fga {

enum class Direction { kDecrease, kIncrease };

struct AttackProblem {
  Wsn graph;
  std::vector<NodeId> attackers;
  // Exactly one of `targets` / `target_pairs` is non-empty.
  std::vector<NodeId> targets;
  std::vector<std::pair<NodeId, NodeId>> target_pairs;
  std::vector<NodeId> intermediaries;
  std::size_t budget = 0;
  double threshold = 0.0;
  Direction direction = Direction::kDecrease;

  // Throws AttackError when attackers overlap the targets, a pair is linked
  // or touches an attacker, or the threshold leaves [-1, 1].
  void Validate() const;
};

class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct ExhaustiveResult {
  bool feasible = false;
  // Worst target value under the best move set: the largest goodness (or
  // pair prediction) when decreasing, the smallest when increasing.
  double objective = 0.0;
  // The optimal move set; its per-target success flags are in `success`.
  AttackOutcome best;
  std::vector<bool> success;
  std::size_t move_sets_evaluated = 0;
};

inline constexpr std::size_t kMaxMoveSets = 1'000'000;

// Number of move sets the solver would enumerate for `problem`.
std::size_t CountMoveSets(const AttackProblem& problem,
                          std::span<const double> weight_grid);

// Objective of `scores` for the problem's targets (see ExhaustiveResult).
double ProblemObjective(const AttackProblem& problem, const FgaScores& scores);
bool MeetsThreshold(const AttackProblem& problem, double objective);

ExhaustiveResult SolveExhaustive(const AttackProblem& problem,
                                 std::span<const double> weight_grid,
                                 const AttackConfig& cfg = {});
ExhaustiveResult SolveExhaustive(const AttackProblem& problem,
                                 const AttackConfig& cfg = {});

}  // namespace fga

#endif  // FGA_EXHAUSTIVE_H_
