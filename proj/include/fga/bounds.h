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

// Closed-form limits on how far single Sybil edges, direct attacks and
// weakened influencers can move goodness, and harnesses that measure the
// real change against them.

#ifndef FGA_BOUNDS_H_
#define FGA_BOUNDS_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fga/engine.h"
#include "fga/wsn.h"

namespace fga {

inline constexpr double kBoundTolerance = 1e-9;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MinKViolation {
  enum class Reason { kInDegree, kOutDegree, kWeightMass };
  NodeId node = 0;
  Reason reason = Reason::kInDegree;
};
std::string_view ReasonName(MinKViolation::Reason r);

struct MinKNeighbourCert {
  std::size_t k = 0;
  bool holds = false;
  std::vector<MinKViolation> violations;
};

// indeg >= k, outdeg >= k and incoming |w| mass <= k at every node.
MinKNeighbourCert CheckMinKNeighbour(const Wsn& g, std::size_t k);

// 2 / ((indeg(i) + 1) k).
double IndirectSybilBound(std::size_t intermediary_indeg, std::size_t k);
// Throws BoundError unless g is a minimum-k-neighbour network.
double IndirectSybilBound(const Wsn& g, NodeId intermediary, std::size_t k);

// 2 / indeg(t). Throws BoundError for indeg 0.
double DirectSybilBound(std::size_t target_indeg);
double DirectSybilBound(const Wsn& g, NodeId target);

// ceil(2 g(t) indeg(t)). Flipping the sign takes strictly more attackers.
// Throws BoundError when g(t) <= 0.
std::size_t DirectFlipBudget(double target_goodness, std::size_t target_indeg);
std::size_t DirectFlipBudget(const FgaScores& scores, const Wsn& g,
                             NodeId target);

// 1 - 2 delta k / (k + l). Throws BoundError when k = l = 0 or delta is
// outside [0, 1].
double StabiliserLowerBound(std::size_t k, std::size_t l, double delta);

enum class BoundScenario { kDirectSybil, kIndirectSybil, kStabiliser };
BoundScenario ParseBoundScenario(std::string_view name);
std::string_view BoundScenarioName(BoundScenario s);

struct BoundReport {
  BoundScenario scenario = BoundScenario::kDirectSybil;
  std::size_t trial = 0;
  NodeId target = kNoNode;
  NodeId intermediary = kNoNode;
  // Network degree k (indirect), influencer count (stabiliser), else 0.
  std::size_t k = 0;
  // Stabiliser count (stabiliser only).
  std::size_t l = 0;
  // Sybil edge weight, or the realised fairness drop for the stabiliser.
  double weight = 0.0;
  double bound_value = 0.0;
  // Change of g(t); for the stabiliser, the drop 1 - g(x).
  double observed_delta = 0.0;
  bool satisfied = false;
};

// Weights tried for every Sybil trial.
inline constexpr double kSybilWeights[] = {-1.0, -0.5, 0.5, 1.0};

struct BoundTrialOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  // Network degree for the indirect scenario.
  std::size_t k = 3;
  unsigned threads = 1;
};

// Direct: random target with indeg >= 1, one Sybil rating it. Indirect:
// random intermediary i, one Sybil rating it; the reported target is the
// node t != i whose goodness moved most. One report per trial and weight.
// Throws BoundError when the scenario cannot be set up on g; the stabiliser
// scenario needs no graph and is run by VerifyStabiliserBound.
std::vector<BoundReport> VerifyBoundEmpirically(const Wsn& g,
                                                BoundScenario scenario,
                                                const BoundTrialOptions& opts);

// Star x rated +1 by k influencers and l stabilisers. Influencer fairness is
// pinned to 1 - delta with sinks; when delta is not reachable the largest
// reachable drop is used and reported.
BoundReport MeasureStabiliser(std::size_t k, std::size_t l, double delta);
std::vector<BoundReport> VerifyStabiliserBound(std::span<const std::size_t> ks,
                                               std::span<const std::size_t> ls,
                                               std::span<const double> deltas);

struct FlipReport {
  std::size_t trial = 0;
  NodeId target = kNoNode;
  std::size_t budget = 0;
  std::size_t attackers = 0;
  double goodness_before = 0.0;
  double goodness_after = 0.0;
  double min_attacker_fairness = 0.0;
  // Instances discarded because some attacker ended below fairness 1/2.
  std::size_t resampled = 0;
  bool flipped = false;
};

struct FlipOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t max_resamples = 200;
  unsigned threads = 1;
};

// Per trial: a target with g > 0 and budget + 1 attackers that do not rate it
// yet; runs the direct attack and resamples while any attacker ends below
// fairness 1/2. Throws BoundError when no valid instance is found.
std::vector<FlipReport> VerifyDirectFlip(const Wsn& g, const FlipOptions& opts);

void WriteBoundReportsCsv(std::ostream& os, std::span<const BoundReport> rows);

}  // namespace fga

#endif  // FGA_BOUNDS_H_
