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

#ifndef FGA_GENERATORS_H_
#define FGA_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fga/wsn.h"

namespace fga {

struct GeneratorParams {
  enum class Kind {
    kMinKNeighbour,
    kStabilisedStar,
    kCompletePositive,
    kRandomErdos,
  };

  Kind kind = Kind::kRandomErdos;
  std::size_t n = 0;
  // Degree for min-k-neighbour, influencer count for the stabilised star.
  std::size_t k = 0;
  // Stabiliser count for the stabilised star.
  std::size_t l = 0;
  // Edge count for random graphs.
  std::size_t m = 0;
  // Probability that a random-graph edge is positive. Magnitudes are
  // uniform on (0, 1].
  double positive_fraction = 0.5;
  std::uint64_t seed = 0;
};

// Parses "min-k-neighbour", "stabilised-star", "complete-positive",
// "random-erdos". Throws std::invalid_argument otherwise.
GeneratorParams::Kind ParseGeneratorKind(std::string_view name);

Wsn Generate(const GeneratorParams& params);

// Random digraph with exactly k in- and out-edges per node and i.i.d.
// uniform weights on [-1, 1], so every node's incoming absolute weight mass
// is at most k. Requires n >= k + 1.
Wsn GenerateMinKNeighbour(std::size_t n, std::size_t k, std::uint64_t seed);

// n nodes, every ordered pair rated +1.
Wsn GenerateCompletePositive(std::size_t n);

// m distinct random edges (no self-loops) on n nodes.
Wsn GenerateRandom(std::size_t n, std::size_t m, double positive_fraction,
                   std::uint64_t seed);

// Node x rated +1 by k influencers and l stabilisers; nobody else has edges.
struct StabilisedStar {
  Wsn graph;
  NodeId center = 0;
  std::vector<NodeId> influencers;
  std::vector<NodeId> stabilisers;
};
StabilisedStar GenerateStabilisedStar(std::size_t k, std::size_t l);

// Four-node all-positive benchmark (nodes labelled 1..4, edges 2->1, 2->4,
// 3->1). Adding a fresh node 5 rating 1 with -1 gives the direct-attack
// scenario; rating 4 with -1 gives the indirect one.
Wsn FourNodeBenchmark();

}  // namespace fga

#endif  // FGA_GENERATORS_H_
