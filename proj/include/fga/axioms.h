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

// Executable checks of the eleven fairness/goodness axioms.
//
// Every check is evaluated two ways:
//   fixed   - one pass of the goodness (fairness) formula with the other
//             score held at the prescribed values;
//   gadget  - the converged fixed point of a constructed graph that realises
//             the prescribed rater fairness / rating error.
// Some prescriptions have no fixed-point realisation (a rater of fairness 0,
// a rating error of exactly 2); those cases run in fixed mode only.

#ifndef FGA_AXIOMS_H_
#define FGA_AXIOMS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fga/gadgets.h"
#include "fga/random.h"
#include "json.hpp"

namespace fga {

struct AxiomOptions {
  double tolerance = 1e-9;
  GadgetParams gadget;
};

struct AxiomVerdict {
  bool holds = true;
  std::size_t fixed_cases = 0;
  std::size_t gadget_cases = 0;
  // Largest residual of any asserted equality.
  double max_abs_error = 0.0;
  std::string first_failure;

  void Merge(const AxiomVerdict& other);
};

// 1. g^{w0, f0+delta} = g^{w0, f0} + g^{w0, delta}.
AxiomVerdict CheckSmoothGoodness(double f0, double delta, double omega0,
                                 std::size_t raters = 3,
                                 const AxiomOptions& opts = {});
// 2. g^{w0+delta, f0} = g^{w0, f0} + g^{delta, f0}.
AxiomVerdict CheckIncreaseWeight(double f0, double omega0, double delta,
                                 std::size_t raters = 3,
                                 const AxiomOptions& opts = {});
// 3. Equal fairness, higher rating => goodness not lower. Equal rating,
// higher fairness => goodness not lower for rating >= 0, and not smaller in
// magnitude for rating < 0.
AxiomVerdict CheckGoodnessOrder(const RaterGroup& first,
                                const RaterGroup& second,
                                const AxiomOptions& opts = {});
AxiomVerdict CheckMonotonicityGoodness(std::size_t samples, Rng& rng,
                                       const AxiomOptions& opts = {});
// 4. all raters f = 1, w = 1 => g = 1; 6. indeg 0 => g = 1;
// 11. outdeg 0 => f = 1.
AxiomVerdict CheckMaximalTrust(std::size_t raters,
                               const AxiomOptions& opts = {});
AxiomVerdict CheckGoodnessBaseline(const Wsn& g, const AxiomOptions& opts = {});
AxiomVerdict CheckFairnessBaseline(const Wsn& g, const AxiomOptions& opts = {});
AxiomVerdict CheckMaximalTrustAndBaselines(const AxiomOptions& opts = {});
// 5. g(v) = sum |S_i| g_i(v) / sum |S_i|.
AxiomVerdict CheckGroupsGoodness(std::span<const RaterGroup> groups,
                                 const AxiomOptions& opts = {});

// 7. f^{(d+D)/2} = (f^d + f^D) / 2 for a rater with `rated` successors.
AxiomVerdict CheckSmoothFairness(double d, double big_d, std::size_t rated = 3,
                                 const AxiomOptions& opts = {});
// 8. d1 > d2 => f1 <= f2.
AxiomVerdict CheckMonotonicityFairness(double d1, std::size_t n1, double d2,
                                       std::size_t n2,
                                       const AxiomOptions& opts = {});
// 9. error 0 everywhere => f = 1; error 2 everywhere => f = 0.
AxiomVerdict CheckObviousFairness(std::size_t rated,
                                  const AxiomOptions& opts = {});
// 10. f(v) = sum |S_i| f_i(v) / sum |S_i|; groups are (size, error).
struct ErrorGroup {
  std::size_t size = 1;
  double error = 0.0;
};
AxiomVerdict CheckGroupsFairness(std::span<const ErrorGroup> groups,
                                 const AxiomOptions& opts = {});
// 7-10 over random draws.
AxiomVerdict CheckFairnessAxioms(std::size_t samples, Rng& rng,
                                 const AxiomOptions& opts = {});

struct AxiomReport {
  int number = 0;
  std::string name;
  std::size_t draws = 0;
  AxiomVerdict verdict;
};

struct AxiomSuiteConfig {
  std::size_t draws = 1000;
  std::uint64_t seed = 1;
  // 0 uses every hardware thread. Results do not depend on the count.
  unsigned threads = 0;
  AxiomOptions options;
};

// All eleven axioms, `draws` seeded random cases each.
std::vector<AxiomReport> RunAxiomSuite(const AxiomSuiteConfig& cfg);

nlohmann::json AxiomReportsToJson(std::span<const AxiomReport> reports);

}  // namespace fga

#endif  // FGA_AXIOMS_H_
