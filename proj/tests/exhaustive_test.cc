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

#include "fga/exhaustive.h"

#include <gtest/gtest.h>

#include "fga/attacks.h"
#include "fga/generators.h"
#include "fga/random.h"

namespace fga {
namespace {

AttackConfig Tight() {
  AttackConfig cfg;
  cfg.fga = {.max_iterations = 1000, .residual_tolerance = 1e-13};
  return cfg;
}

// 0 -> 2 (+1); attacker 1 may rate 2.
AttackProblem SingleFlip(std::size_t budget) {
  AttackProblem p;
  p.graph = Wsn(3);
  p.graph.AddEdge(0, 2, 1.0);
  p.attackers = {1};
  p.intermediaries = {2};
  p.targets = {2};
  p.budget = budget;
  p.threshold = 0.0;
  return p;
}

TEST(Exhaustive, DirectFlipIsFeasibleWithOneMove) {
  const ExhaustiveResult r = SolveExhaustive(SingleFlip(1), Tight());
  EXPECT_TRUE(r.feasible);
  ASSERT_EQ(r.best.moves.size(), 1u);
  EXPECT_EQ(r.best.moves[0].weight, -1.0);
  EXPECT_NEAR(r.objective, 0.0, 1e-9);
  EXPECT_EQ(r.success, std::vector<bool>{true});
  EXPECT_EQ(r.move_sets_evaluated, 3u);
}

TEST(Exhaustive, ZeroBudgetIsInfeasible) {
  const ExhaustiveResult r = SolveExhaustive(SingleFlip(0), Tight());
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(r.best.moves.empty());
  EXPECT_NEAR(r.objective, 1.0, 1e-12);
}

TEST(Exhaustive, IncreaseDirection) {
  AttackProblem p = SingleFlip(1);
  p.graph.UpdateWeight(0, 2, -1.0);
  p.direction = Direction::kIncrease;
  const ExhaustiveResult r = SolveExhaustive(p, Tight());
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.best.moves[0].weight, 1.0);
}

TEST(Exhaustive, PairTargetsUsePrediction) {
  AttackProblem p;
  p.graph = Wsn(4);
  p.graph.AddEdge(0, 1, 1.0);
  p.graph.AddEdge(2, 1, 1.0);
  p.attackers = {3};
  p.intermediaries = {1};
  p.target_pairs = {{2, 1}};
  p.budget = 1;
  p.threshold = 0.5;
  p.graph.RemoveEdge(2, 1);
  p.graph.AddEdge(0, 2, 1.0);
  const ExhaustiveResult r = SolveExhaustive(p, Tight());
  EXPECT_TRUE(r.feasible);
  EXPECT_LE(r.objective, 0.5);
}

TEST(Exhaustive, RejectsInvalidProblems) {
  AttackProblem p = SingleFlip(1);
  p.attackers = {2};
  EXPECT_THROW(SolveExhaustive(p), AttackError);
  p = SingleFlip(1);
  p.threshold = 3.0;
  EXPECT_THROW(SolveExhaustive(p), AttackError);
  p = SingleFlip(1);
  p.target_pairs = {{0, 2}};
  EXPECT_THROW(SolveExhaustive(p), AttackError);
  p = SingleFlip(1);
  const double bad_grid[] = {2.0};
  EXPECT_THROW(SolveExhaustive(p, bad_grid), AttackError);
}

TEST(Exhaustive, GuardsLargeInstances) {
  AttackProblem p;
  p.graph = Wsn(60);
  for (NodeId v = 0; v < 30; ++v) p.attackers.push_back(v);
  for (NodeId v = 30; v < 59; ++v) p.intermediaries.push_back(v);
  p.targets = {59};
  p.budget = 3;
  const double grid[] = {-1.0, 1.0};
  EXPECT_GT(CountMoveSets(p, grid), kMaxMoveSets);
  EXPECT_THROW(SolveExhaustive(p), InstanceTooLarge);
  p.budget = 1;
  EXPECT_EQ(CountMoveSets(p, grid), 1u + 30u * 29u * 2u);
}

TEST(Exhaustive, NeverWorseThanGreedy) {
  Rng rng(2024);
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 20 && seed < 200; ++seed) {
    const Wsn g = GenerateRandom(10, 25, 0.8, seed);
    NodeId t = 0;
    while (t < g.node_count() && g.InDegree(t) == 0) ++t;
    if (t == g.node_count()) continue;
    std::vector<NodeId> attackers;
    for (NodeId v = 0; v < g.node_count() && attackers.size() < 2; ++v) {
      if (v != t && !g.HasEdge(v, t)) attackers.push_back(v);
    }
    const auto cands = IndirectCandidates(g, t);
    if (cands.empty()) continue;
    AttackProblem p;
    p.graph = g;
    p.attackers = attackers;
    p.intermediaries = cands;
    p.targets = {t};
    p.budget = attackers.size();
    const ExhaustiveResult opt = SolveExhaustive(p, Tight());
    const AttackResult greedy = IndirectAttackGreedy(g, attackers, t, Tight());
    EXPECT_LE(opt.objective, greedy.outcome.after.goodness[t] + 1e-9) << seed;
    ++checked;
  }
  EXPECT_EQ(checked, 20);
}

}  // namespace
}  // namespace fga
