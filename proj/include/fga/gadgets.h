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

// Small graphs whose fixed point is known in closed form, used to realise
// prescribed rater fairness values and rating errors.
//
// Building block: a pinned sink s rated by `pinners` fresh nodes with +1
// (each rating nothing else) and by one owner r with weight w. Its fixed
// point is
//
//   g(s) = (P + 2 f(r) w) / (P + 2),   P = pinners,
//
// so the owner's error |w - g(s)| can be set to any value in
// [0, (2P + 2 - 2 f(r)) / (P + 2)] by picking w.

#ifndef FGA_GADGETS_H_
#define FGA_GADGETS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fga/engine.h"
#include "fga/wsn.h"

namespace fga {

class GadgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GadgetParams {
  std::size_t pinners = 64;
  std::size_t max_sinks = 64;
};

// Tight iteration used when measuring gadgets.
FgaConfig GadgetFgaConfig();

double PinnedSinkGoodness(std::size_t pinners, double owner_fairness,
                          double w);
double MaxPinnedSinkError(std::size_t pinners, double owner_fairness);
// Weight giving the owner error `error` on a pinned sink; nullopt when the
// error is out of reach.
std::optional<double> PinnedSinkWeight(std::size_t pinners,
                                       double owner_fairness, double error);
// Adds a pinned sink rated by `owner` with weight w. Returns the sink.
NodeId AttachPinnedSink(Wsn& g, NodeId owner, double w, std::size_t pinners);

// How to give a node fairness `target` when it already has `existing_outdeg`
// out-edges with total error `existing_error`: add `sinks` pinned sinks, each
// rated with `weight`.
struct FairnessPin {
  std::size_t sinks = 0;
  double weight = 0.0;
};
std::optional<FairnessPin> DesignFairnessPin(double target,
                                             double existing_error,
                                             std::size_t existing_outdeg,
                                             const GadgetParams& params);

// A homogeneous, unanimous block of raters: `size` nodes of fairness
// `fairness` all rating the target with `rating`.
struct RaterGroup {
  std::size_t size = 1;
  double fairness = 1.0;
  double rating = 1.0;
};

struct GoodnessGadget {
  Wsn graph;
  NodeId target = 0;
  std::vector<NodeId> raters;
  // Intended fairness per entry of `raters`.
  std::vector<double> rater_fairness;
};

// Target rated by the given groups, each rater's fairness pinned through
// sinks. Throws GadgetError when a requested fairness is unreachable.
GoodnessGadget BuildGoodnessGadget(std::span<const RaterGroup> groups,
                                   const GadgetParams& params = {});

struct FairnessGadget {
  Wsn graph;
  NodeId rater = 0;
  std::vector<NodeId> rated;
  // Intended error per entry of `rated`.
  std::vector<double> errors;
};

// One rater whose error on its j-th successor is errors[j]. Throws
// GadgetError when an error is unreachable.
FairnessGadget BuildFairnessGadget(std::span<const double> errors,
                                   const GadgetParams& params = {});

struct GoodnessMeasurement {
  double goodness = 0.0;
  // max |f(rater) - intended|.
  double fairness_deviation = 0.0;
};
GoodnessMeasurement Measure(const GoodnessGadget& gadget);

struct FairnessMeasurement {
  double fairness = 0.0;
  // max | |w - g(rated)| - intended |.
  double error_deviation = 0.0;
};
FairnessMeasurement Measure(const FairnessGadget& gadget);

// Goodness of a star whose raters' fairness is held fixed (no iteration).
double GoodnessWithFixedFairness(std::span<const RaterGroup> groups);
// Fairness of one rater whose successors' goodness is held fixed so that its
// errors are exactly `errors`.
double FairnessWithFixedGoodness(std::span<const double> errors);

}  // namespace fga

#endif  // FGA_GADGETS_H_
