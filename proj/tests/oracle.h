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

// Reference fairness/goodness evaluation written straight from the
// definitions over a flat edge list. Shares no code with the library.

#ifndef FGA_TESTS_ORACLE_H_
#define FGA_TESTS_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <tuple>
#include <vector>

namespace fga::testing {

struct OracleEdge {
  std::size_t u;
  std::size_t v;
  double w;
};

struct OracleScores {
  std::vector<double> f;
  std::vector<double> g;
};

inline OracleScores OracleFga(std::size_t n,
                              const std::vector<OracleEdge>& edges,
                              int sweeps = 10000, double stop = 1e-15) {
  OracleScores s{std::vector<double>(n, 1.0), std::vector<double>(n, 1.0)};
  for (int it = 0; it < sweeps; ++it) {
    std::vector<double> gsum(n, 0.0), fsum(n, 0.0);
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& e : edges) {
      gsum[e.v] += s.f[e.u] * e.w;
      ++indeg[e.v];
    }
    std::vector<double> g(n);
    for (std::size_t v = 0; v < n; ++v) {
      g[v] = indeg[v] == 0 ? 1.0 : gsum[v] / indeg[v];
    }
    for (const auto& e : edges) {
      fsum[e.u] += std::abs(e.w - g[e.v]) / 2.0;
      ++outdeg[e.u];
    }
    std::vector<double> f(n);
    double change = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      f[u] = outdeg[u] == 0 ? 1.0 : 1.0 - fsum[u] / outdeg[u];
      change = std::max({change, std::abs(f[u] - s.f[u]),
                         std::abs(g[u] - s.g[u])});
    }
    s.f = std::move(f);
    s.g = std::move(g);
    if (change < stop) break;
  }
  return s;
}

}  // namespace fga::testing

#endif  // FGA_TESTS_ORACLE_H_
