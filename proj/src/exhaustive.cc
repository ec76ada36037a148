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

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <string>

namespace fga {
namespace {

constexpr double kDefaultGrid[] = {-1.0, 1.0};

std::size_t SaturatingMul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

std::size_t SaturatingAdd(std::size_t a, std::size_t b) {
  return b > std::numeric_limits<std::size_t>::max() - a
             ? std::numeric_limits<std::size_t>::max()
             : a + b;
}

struct MovePair {
  NodeId attacker;
  NodeId rated;
};

std::vector<MovePair> MovePairs(const AttackProblem& p) {
  std::vector<MovePair> pairs;
  for (NodeId a : p.attackers) {
    for (NodeId i : p.intermediaries) {
      if (a != i) pairs.push_back({a, i});
    }
  }
  return pairs;
}

// Per-target value whose worst case is the objective.
std::vector<double> TargetValues(const AttackProblem& p, const FgaScores& s) {
  std::vector<double> values;
  const bool decrease = p.direction == Direction::kDecrease;
  for (NodeId t : p.targets) values.push_back(s.goodness[t]);
  for (const auto& [u, v] : p.target_pairs) {
    const double uv = PredictWeight(s, u, v);
    const double vu = PredictWeight(s, v, u);
    // "either" prediction may cross the threshold.
    values.push_back(decrease ? std::min(uv, vu) : std::max(uv, vu));
  }
  return values;
}

bool Meets(Direction d, double value, double threshold) {
  return d == Direction::kDecrease ? value <= threshold : value >= threshold;
}

}  // namespace

void AttackProblem::Validate() const {
  if (targets.empty() == target_pairs.empty()) {
    throw AttackError("exactly one of targets / target pairs must be given");
  }
  if (!(threshold >= -1.0 && threshold <= 1.0)) {
    throw AttackError("threshold outside [-1, 1]");
  }
  const std::set<NodeId> a(attackers.begin(), attackers.end());
  auto check_node = [&](NodeId v) {
    if (!graph.HasNode(v)) throw AttackError("unknown node " + std::to_string(v));
  };
  for (NodeId v : attackers) check_node(v);
  for (NodeId v : intermediaries) check_node(v);
  for (NodeId t : targets) {
    check_node(t);
    if (a.contains(t)) {
      throw AttackError("target " + std::to_string(t) + " is an attacker");
    }
  }
  for (const auto& [u, v] : target_pairs) {
    check_node(u);
    check_node(v);
    if (u == v || a.contains(u) || a.contains(v)) {
      throw AttackError("target pair must be two non-attacker nodes");
    }
    if (graph.HasEdge(u, v) || graph.HasEdge(v, u)) {
      throw AttackError("target pair {" + std::to_string(u) + "," +
                        std::to_string(v) + "} is linked");
    }
  }
}

std::size_t CountMoveSets(const AttackProblem& p,
                          std::span<const double> grid) {
  const std::size_t pairs = MovePairs(p).size();
  // sum_{j <= budget} C(pairs, j) * |grid|^j
  std::size_t total = 0;
  std::size_t term = 1;  // C(pairs, j) * |grid|^j
  for (std::size_t j = 0; j <= std::min(p.budget, pairs); ++j) {
    total = SaturatingAdd(total, term);
    if (j == pairs) break;
    // C(n, j+1) = C(n, j) * (n - j) / (j + 1); divide first where exact.
    const std::size_t num = pairs - j;
    const std::size_t den = j + 1;
    if (term % den == 0) {
      term = SaturatingMul(term / den, num);
    } else {
      term = SaturatingMul(term, num) / den;
    }
    term = SaturatingMul(term, grid.size());
  }
  return total;
}

double ProblemObjective(const AttackProblem& p, const FgaScores& s) {
  const std::vector<double> values = TargetValues(p, s);
  return p.direction == Direction::kDecrease
             ? *std::max_element(values.begin(), values.end())
             : *std::min_element(values.begin(), values.end());
}

bool MeetsThreshold(const AttackProblem& p, double objective) {
  return Meets(p.direction, objective, p.threshold);
}

ExhaustiveResult SolveExhaustive(const AttackProblem& p,
                                 std::span<const double> grid,
                                 const AttackConfig& cfg) {
  p.Validate();
  if (grid.empty()) throw AttackError("empty weight grid");
  for (double w : grid) {
    if (!(w >= -1.0 && w <= 1.0)) throw AttackError("grid weight outside [-1, 1]");
  }
  const std::size_t count = CountMoveSets(p, grid);
  if (count > kMaxMoveSets) {
    throw InstanceTooLarge("instance has " + std::to_string(count) +
                           " candidate move sets (limit " +
                           std::to_string(kMaxMoveSets) + ")");
  }

  const std::vector<MovePair> pairs = MovePairs(p);
  const FgaScores base = ComputeFga(p.graph, cfg.fga);
  const bool decrease = p.direction == Direction::kDecrease;

  ExhaustiveResult result;
  bool have_best = false;
  std::vector<std::pair<std::size_t, double>> chosen;  // (pair index, weight)

  auto evaluate = [&] {
    Wsn g = p.graph;
    std::vector<AttackMove> moves;
    for (const auto& [idx, w] : chosen) {
      moves.push_back(ApplyMove(g, pairs[idx].attacker, pairs[idx].rated, w));
    }
    FgaScores after = moves.empty() ? base : Rescore(g, base, cfg);
    const double obj = ProblemObjective(p, after);
    ++result.move_sets_evaluated;
    const bool better = !have_best || (decrease ? obj < result.objective
                                                : obj > result.objective);
    if (better) {
      have_best = true;
      result.objective = obj;
      result.best.moves = std::move(moves);
      result.best.after = std::move(after);
    }
  };

  // Sizes ascending, so the first optimum found uses the fewest moves.
  std::function<void(std::size_t, std::size_t)> extend =
      [&](std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
          evaluate();
          return;
        }
        for (std::size_t i = start; i < pairs.size(); ++i) {
          for (double w : grid) {
            chosen.emplace_back(i, w);
            extend(i + 1, remaining - 1);
            chosen.pop_back();
          }
        }
      };
  for (std::size_t size = 0; size <= std::min(p.budget, pairs.size()); ++size) {
    extend(0, size);
  }

  result.feasible = MeetsThreshold(p, result.objective);
  result.best.before = base;
  result.best.targets = p.targets;
  for (NodeId t : p.targets) {
    result.best.delta_goodness.push_back(result.best.after.goodness[t] -
                                         base.goodness[t]);
  }
  for (double v : TargetValues(p, result.best.after)) {
    result.success.push_back(Meets(p.direction, v, p.threshold));
  }
  return result;
}

ExhaustiveResult SolveExhaustive(const AttackProblem& p,
                                 const AttackConfig& cfg) {
  return SolveExhaustive(p, kDefaultGrid, cfg);
}

}  // namespace fga
