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

#include "fga/attacks.h"

#include <algorithm>
#include <set>
#include <utility>

#include "fga/parallel.h"

namespace fga {
namespace {

constexpr double kIndirectWeights[] = {1.0, -1.0};

void CheckAttackers(const Wsn& g, std::span<const NodeId> attackers,
                    NodeId target) {
  if (!g.HasNode(target)) {
    throw AttackError("unknown target " + std::to_string(target));
  }
  std::set<NodeId> seen;
  for (NodeId a : attackers) {
    if (!g.HasNode(a)) throw AttackError("unknown attacker " + std::to_string(a));
    if (a == target) {
      throw AttackError("target " + std::to_string(target) +
                        " is also an attacker");
    }
    if (!seen.insert(a).second) {
      throw AttackError("attacker " + std::to_string(a) + " listed twice");
    }
  }
}

// Reverts a move applied by ApplyMove.
void UndoMove(Wsn& g, const AttackMove& move, double previous_weight) {
  if (move.kind == AttackMove::Kind::kEdgeAddition) {
    g.RemoveEdge(move.attacker, move.rated);
  } else {
    g.UpdateWeight(move.attacker, move.rated, previous_weight);
  }
}

void FinishOutcome(AttackOutcome& out, NodeId target) {
  out.targets = {target};
  out.delta_goodness = {out.after.goodness[target] -
                        out.before.goodness[target]};
}

}  // namespace

AttackMove ApplyMove(Wsn& g, NodeId attacker, NodeId rated, double w) {
  const bool added = g.SetWeight(attacker, rated, w);
  return {added ? AttackMove::Kind::kEdgeAddition
                : AttackMove::Kind::kWeightUpdate,
          attacker, rated, w};
}

FgaScores Rescore(const Wsn& g, const FgaScores& warm,
                  const AttackConfig& cfg) {
  return cfg.cold ? ComputeFga(g, cfg.fga) : RecomputeAfter(g, warm, cfg.fga);
}

std::vector<NodeId> SortByFairness(std::span<const NodeId> attackers,
                                   const FgaScores& scores) {
  std::vector<NodeId> sorted(attackers.begin(), attackers.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](NodeId a, NodeId b) {
    if (scores.fairness[a] != scores.fairness[b]) {
      return scores.fairness[a] > scores.fairness[b];
    }
    return a < b;
  });
  return sorted;
}

AttackResult DirectAttack(const Wsn& g, std::span<const NodeId> attackers,
                          NodeId target, const AttackConfig& cfg) {
  CheckAttackers(g, attackers, target);
  AttackResult r{g, {}};
  r.outcome.before = ComputeFga(g, cfg.fga);
  for (NodeId a : attackers) {
    r.outcome.moves.push_back(ApplyMove(r.graph, a, target, -1.0));
  }
  r.outcome.after = attackers.empty()
                        ? r.outcome.before
                        : Rescore(r.graph, r.outcome.before, cfg);
  FinishOutcome(r.outcome, target);
  return r;
}

std::vector<NodeId> IndirectCandidates(const Wsn& g, NodeId target) {
  std::set<NodeId> out;
  for (const Arc& p : g.InArcs(target)) {
    for (const Arc& s : g.OutArcs(p.node)) {
      if (s.node != target) out.insert(s.node);
    }
  }
  return {out.begin(), out.end()};
}

std::optional<IndirectChoice> BestIndirectMove(const Wsn& g,
                                               const FgaScores& current,
                                               NodeId attacker, NodeId target,
                                               const AttackConfig& cfg) {
  struct Candidate {
    NodeId rated;
    double weight;
  };
  std::vector<Candidate> candidates;
  for (NodeId n2 : IndirectCandidates(g, target)) {
    if (n2 == attacker) continue;
    for (double w : kIndirectWeights) candidates.push_back({n2, w});
  }
  if (candidates.empty()) return std::nullopt;

  const unsigned threads = ResolveThreads(cfg.threads);
  std::vector<Wsn> scratch(std::min<std::size_t>(threads, candidates.size()),
                           g);
  std::vector<double> value(candidates.size());
  ParallelFor(candidates.size(), threads, [&](std::size_t i, unsigned w) {
    Wsn& work = scratch[w];
    const Candidate& c = candidates[i];
    const double previous = work.Weight(attacker, c.rated).value_or(0.0);
    const AttackMove move = ApplyMove(work, attacker, c.rated, c.weight);
    value[i] = Rescore(work, current, cfg).goodness[target];
    UndoMove(work, move, previous);
  });

  // Enumeration order already encodes the tie-break (n2 ascending, +1 first),
  // so only a strictly smaller value displaces the incumbent.
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (value[i] < value[best]) best = i;
  }
  return IndirectChoice{candidates[best].rated, candidates[best].weight,
                        value[best]};
}

AttackResult IndirectAttackGreedy(const Wsn& g,
                                  std::span<const NodeId> attackers,
                                  NodeId target, const AttackConfig& cfg) {
  CheckAttackers(g, attackers, target);
  AttackResult r{g, {}};
  r.outcome.before = ComputeFga(g, cfg.fga);
  FgaScores current = r.outcome.before;
  for (NodeId a : SortByFairness(attackers, r.outcome.before)) {
    const auto choice = BestIndirectMove(r.graph, current, a, target, cfg);
    if (!choice) {
      r.outcome.exhausted = true;
      continue;
    }
    r.outcome.moves.push_back(
        ApplyMove(r.graph, a, choice->rated, choice->weight));
    current = Rescore(r.graph, current, cfg);
  }
  r.outcome.after = std::move(current);
  FinishOutcome(r.outcome, target);
  return r;
}

std::size_t ScaledBatchSize(std::size_t indeg, std::size_t remaining,
                            const ScaledParams& params) {
  return std::min({params.scale * indeg, params.max_edges, remaining});
}

AttackResult IndirectAttackScaled(const Wsn& g,
                                  std::span<const NodeId> attackers,
                                  NodeId target, const ScaledParams& params,
                                  const AttackConfig& cfg) {
  CheckAttackers(g, attackers, target);
  if (params.scale == 0 || params.max_edges == 0) {
    throw AttackError("scale and max_edges must be positive");
  }
  AttackResult r{g, {}};
  r.outcome.before = ComputeFga(g, cfg.fga);
  FgaScores current = r.outcome.before;
  const std::vector<NodeId> sorted = SortByFairness(attackers, r.outcome.before);
  std::size_t i = 0;
  while (i < sorted.size()) {
    const auto choice =
        BestIndirectMove(r.graph, current, sorted[i], target, cfg);
    if (!choice) {
      r.outcome.exhausted = true;
      ++i;
      continue;
    }
    const std::size_t batch = ScaledBatchSize(
        r.graph.InDegree(choice->rated), sorted.size() - i, params);
    for (std::size_t j = i; j < i + batch; ++j) {
      // The rated node may itself be a later attacker; it cannot rate itself.
      if (sorted[j] == choice->rated) continue;
      r.outcome.moves.push_back(
          ApplyMove(r.graph, sorted[j], choice->rated, choice->weight));
    }
    current = Rescore(r.graph, current, cfg);
    i += std::max<std::size_t>(batch, 1);
  }
  r.outcome.after = std::move(current);
  FinishOutcome(r.outcome, target);
  return r;
}

MixedResult MixedAttack(const Wsn& g, std::span<const NodeId> direct_attackers,
                        std::span<const NodeId> indirect_attackers,
                        NodeId target, const AttackConfig& cfg) {
  std::set<NodeId> direct(direct_attackers.begin(), direct_attackers.end());
  for (NodeId a : indirect_attackers) {
    if (direct.contains(a)) {
      throw AttackError("attacker " + std::to_string(a) +
                        " assigned to both direct and indirect groups");
    }
  }
  AttackResult first = DirectAttack(g, direct_attackers, target, cfg);
  AttackResult second =
      IndirectAttackGreedy(first.graph, indirect_attackers, target, cfg);

  MixedResult m;
  m.direct_moves = first.outcome.moves.size();
  m.delta_direct = first.outcome.delta_goodness[0];
  m.result.graph = std::move(second.graph);
  AttackOutcome& out = m.result.outcome;
  out.before = std::move(first.outcome.before);
  out.after = std::move(second.outcome.after);
  out.moves = std::move(first.outcome.moves);
  out.moves.insert(out.moves.end(), second.outcome.moves.begin(),
                   second.outcome.moves.end());
  out.exhausted = second.outcome.exhausted;
  FinishOutcome(out, target);
  m.delta_total = out.delta_goodness[0];
  m.delta_indirect = m.delta_total - m.delta_direct;
  return m;
}

MixedResult MixedAttack(const Wsn& g, std::span<const NodeId> attackers,
                        NodeId target, std::size_t k1, std::size_t k2,
                        const AttackConfig& cfg) {
  if (k1 + k2 > attackers.size()) {
    throw AttackError("k1 + k2 exceeds the attacker pool");
  }
  return MixedAttack(g, attackers.subspan(0, k1), attackers.subspan(k1, k2),
                     target, cfg);
}

NodeId InjectSybil(Wsn& g, NodeId rated, double w) {
  if (!g.HasNode(rated)) {
    throw AttackError("unknown node " + std::to_string(rated));
  }
  // Validate before mutating so a bad weight leaves no dangling node.
  if (!(w >= -1.0 && w <= 1.0)) {
    throw GraphError(GraphError::Kind::kWeightOutOfRange,
                     "sybil weight outside [-1, 1]");
  }
  std::string label = "sybil" + std::to_string(g.node_count());
  while (g.FindLabel(label)) label += "_";
  const NodeId s = g.AddNode(label);
  g.AddEdge(s, rated, w);
  return s;
}

}  // namespace fga
