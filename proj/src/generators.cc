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

#include "fga/generators.h"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "fga/random.h"

namespace fga {
namespace {

using Pair = std::pair<NodeId, NodeId>;

double RandomMagnitude(Rng& rng) {
  // (0, 1]
  return 1.0 - rng.UniformUnit();
}

}  // namespace

GeneratorParams::Kind ParseGeneratorKind(std::string_view name) {
  if (name == "min-k-neighbour") return GeneratorParams::Kind::kMinKNeighbour;
  if (name == "stabilised-star") return GeneratorParams::Kind::kStabilisedStar;
  if (name == "complete-positive") {
    return GeneratorParams::Kind::kCompletePositive;
  }
  if (name == "random-erdos") return GeneratorParams::Kind::kRandomErdos;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

Wsn Generate(const GeneratorParams& params) {
  switch (params.kind) {
    case GeneratorParams::Kind::kMinKNeighbour:
      return GenerateMinKNeighbour(params.n, params.k, params.seed);
    case GeneratorParams::Kind::kStabilisedStar:
      return GenerateStabilisedStar(params.k, params.l).graph;
    case GeneratorParams::Kind::kCompletePositive:
      return GenerateCompletePositive(params.n);
    case GeneratorParams::Kind::kRandomErdos:
      return GenerateRandom(params.n, params.m, params.positive_fraction,
                            params.seed);
  }
  throw std::invalid_argument("unknown generator kind");
}

Wsn GenerateMinKNeighbour(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("min-k-neighbour needs k >= 1");
  if (n <= k) {
    throw std::invalid_argument("min-k-neighbour infeasible: n = " +
                                std::to_string(n) + " <= k = " +
                                std::to_string(k));
  }
  Rng rng(seed);

  // Circulant on a random relabelling: node order[j] rates order[j + s] for
  // k distinct offsets s. Exactly k in/out edges, no loops, no duplicates.
  std::vector<NodeId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);
  rng.Shuffle(order);
  std::vector<std::size_t> offsets = rng.SampleIndices(n - 1, k);
  std::vector<Pair> edges;
  std::set<Pair> present;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t off : offsets) {
      Pair e{order[j], order[(j + off + 1) % n]};
      edges.push_back(e);
      present.insert(e);
    }
  }

  // Degree-preserving double-edge swaps randomise away the circulant
  // structure.
  const std::size_t attempts = 10 * edges.size();
  for (std::size_t a = 0; a < attempts; ++a) {
    const std::size_t i = rng.Below(edges.size());
    const std::size_t j = rng.Below(edges.size());
    if (i == j) continue;
    const auto [s1, t1] = edges[i];
    const auto [s2, t2] = edges[j];
    if (s1 == t2 || s2 == t1) continue;
    if (present.contains({s1, t2}) || present.contains({s2, t1})) continue;
    present.erase(edges[i]);
    present.erase(edges[j]);
    edges[i] = {s1, t2};
    edges[j] = {s2, t1};
    present.insert(edges[i]);
    present.insert(edges[j]);
  }

  Wsn g(n);
  for (const auto& [s, t] : present) g.AddEdge(s, t, rng.Uniform(-1.0, 1.0));
  return g;
}

Wsn GenerateCompletePositive(std::size_t n) {
  Wsn g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v) g.AddEdge(u, v, 1.0);
    }
  }
  return g;
}

Wsn GenerateRandom(std::size_t n, std::size_t m, double positive_fraction,
                   std::uint64_t seed) {
  const std::size_t capacity = n < 2 ? 0 : n * (n - 1);
  if (m > capacity) {
    throw std::invalid_argument("too many edges requested for " +
                                std::to_string(n) + " nodes");
  }
  if (!(positive_fraction >= 0.0 && positive_fraction <= 1.0)) {
    throw std::invalid_argument("positive_fraction outside [0, 1]");
  }
  Rng rng(seed);
  std::vector<Pair> chosen;
  if (2 * m <= capacity) {
    std::set<Pair> seen;
    while (chosen.size() < m) {
      const auto u = static_cast<NodeId>(rng.Below(n));
      const auto v = static_cast<NodeId>(rng.Below(n));
      if (u == v || !seen.insert({u, v}).second) continue;
      chosen.push_back({u, v});
    }
  } else {
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (u != v) chosen.push_back({u, v});
      }
    }
    rng.Shuffle(chosen);
    chosen.resize(m);
  }
  Wsn g(n);
  for (const auto& [u, v] : chosen) {
    const double mag = RandomMagnitude(rng);
    g.AddEdge(u, v, rng.Bernoulli(positive_fraction) ? mag : -mag);
  }
  return g;
}

StabilisedStar GenerateStabilisedStar(std::size_t k, std::size_t l) {
  if (k + l == 0) {
    throw std::invalid_argument("stabilised star needs k + l >= 1");
  }
  StabilisedStar star;
  star.center = star.graph.AddNode("x");
  for (std::size_t i = 0; i < k; ++i) {
    const NodeId n = star.graph.AddNode("n" + std::to_string(i));
    star.graph.AddEdge(n, star.center, 1.0);
    star.influencers.push_back(n);
  }
  for (std::size_t j = 0; j < l; ++j) {
    const NodeId s = star.graph.AddNode("s" + std::to_string(j));
    star.graph.AddEdge(s, star.center, 1.0);
    star.stabilisers.push_back(s);
  }
  return star;
}

Wsn FourNodeBenchmark() {
  Wsn g;
  for (int i = 1; i <= 4; ++i) g.AddNode(std::to_string(i));
  g.AddEdge(1, 0, 1.0);
  g.AddEdge(1, 3, 1.0);
  g.AddEdge(2, 0, 1.0);
  return g;
}

}  // namespace fga
