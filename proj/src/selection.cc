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

#include "fga/selection.h"

#include <algorithm>
#include <string>

namespace fga {
namespace {

std::vector<NodeId> Sample(const std::vector<NodeId>& pool, std::size_t n,
                           Rng& rng, std::string_view what) {
  if (pool.size() < n) {
    throw SelectionError("insufficient " + std::string(what) + ": need " +
                             std::to_string(n) + ", " +
                             std::to_string(pool.size()) + " qualify",
                         pool.size());
  }
  std::vector<NodeId> out;
  for (std::size_t i : rng.SampleIndices(pool.size(), n)) {
    out.push_back(pool[i]);
  }
  return out;
}

}  // namespace

AttackerClass ParseAttackerClass(std::string_view name) {
  if (name == "established") return AttackerClass::kEstablished;
  if (name == "fresh" || name == "not-established") {
    return AttackerClass::kFresh;
  }
  throw std::invalid_argument("unknown attacker class '" + std::string(name) +
                              "'");
}

std::string_view AttackerClassName(AttackerClass c) {
  return c == AttackerClass::kEstablished ? "established" : "fresh";
}

std::vector<NodeId> QualifyingTargets(const Wsn& g, const FgaScores& scores,
                                      const SelectionCriteria& c) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t indeg = g.InDegree(v);
    if (indeg >= c.target_min_indeg && indeg < c.target_max_indeg_exclusive &&
        scores.goodness[v] >= c.target_min_goodness) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<NodeId> QualifyingAttackers(const Wsn& g, const FgaScores& scores,
                                        const SelectionCriteria& c,
                                        std::span<const NodeId> exclude) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (std::find(exclude.begin(), exclude.end(), v) != exclude.end()) continue;
    bool ok = false;
    if (c.attacker_class == AttackerClass::kEstablished) {
      ok = g.OutDegree(v) > c.established_min_outdeg_exclusive &&
           scores.fairness[v] > c.established_min_fairness_exclusive;
    } else {
      const std::size_t indeg = g.InDegree(v);
      ok = g.OutDegree(v) == 0 && indeg >= c.fresh_min_indeg &&
           indeg < c.fresh_max_indeg_exclusive;
    }
    if (ok) out.push_back(v);
  }
  return out;
}

std::vector<NodeId> SelectTargets(const Wsn& g, const FgaScores& scores,
                                  const SelectionCriteria& c, std::size_t n,
                                  Rng& rng) {
  return Sample(QualifyingTargets(g, scores, c), n, rng, "targets");
}

std::vector<NodeId> SelectAttackers(const Wsn& g, const FgaScores& scores,
                                    const SelectionCriteria& c, std::size_t n,
                                    Rng& rng, std::span<const NodeId> exclude) {
  return Sample(QualifyingAttackers(g, scores, c, exclude), n, rng,
                "attackers");
}

}  // namespace fga
