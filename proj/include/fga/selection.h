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

#ifndef FGA_SELECTION_H_
#define FGA_SELECTION_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "fga/engine.h"
#include "fga/random.h"
#include "fga/wsn.h"

namespace fga {

enum class AttackerClass {
  // outdeg > 5 and f > 0.7.
  kEstablished,
  // 0 < indeg < 10 and outdeg = 0.
  kFresh,
};

AttackerClass ParseAttackerClass(std::string_view name);
std::string_view AttackerClassName(AttackerClass c);

// Defaults pick targets with 0 < indeg < 10 and g >= 0.5.
struct SelectionCriteria {
  std::size_t target_min_indeg = 1;
  std::size_t target_max_indeg_exclusive = 10;
  double target_min_goodness = 0.5;

  AttackerClass attacker_class = AttackerClass::kEstablished;
  std::size_t established_min_outdeg_exclusive = 5;
  double established_min_fairness_exclusive = 0.7;
  std::size_t fresh_min_indeg = 1;
  std::size_t fresh_max_indeg_exclusive = 10;
};

class SelectionError : public std::runtime_error {
 public:
  SelectionError(const std::string& what, std::size_t available)
      : std::runtime_error(what), available_(available) {}
  std::size_t available() const { return available_; }

 private:
  std::size_t available_;
};

std::vector<NodeId> QualifyingTargets(const Wsn& g, const FgaScores& scores,
                                      const SelectionCriteria& c);
// Excludes the nodes in `exclude`.
std::vector<NodeId> QualifyingAttackers(const Wsn& g, const FgaScores& scores,
                                        const SelectionCriteria& c,
                                        std::span<const NodeId> exclude = {});

// Uniform samples without replacement. Throw SelectionError when fewer than
// n nodes qualify.
std::vector<NodeId> SelectTargets(const Wsn& g, const FgaScores& scores,
                                  const SelectionCriteria& c, std::size_t n,
                                  Rng& rng);
std::vector<NodeId> SelectAttackers(const Wsn& g, const FgaScores& scores,
                                    const SelectionCriteria& c, std::size_t n,
                                    Rng& rng,
                                    std::span<const NodeId> exclude = {});

}  // namespace fga

#endif  // FGA_SELECTION_H_
