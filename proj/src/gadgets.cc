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

#include "fga/gadgets.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace fga {
namespace {

constexpr double kSlack = 1e-15;

void CheckUnit(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi)) {
    throw GadgetError(std::string(what) + " " + std::to_string(v) +
                      " out of range");
  }
}

}  // namespace

FgaConfig GadgetFgaConfig() {
  return {.max_iterations = 1000, .residual_tolerance = 1e-13};
}

double PinnedSinkGoodness(std::size_t pinners, double owner_fairness,
                          double w) {
  const auto p = static_cast<double>(pinners);
  return (p + 2.0 * owner_fairness * w) / (p + 2.0);
}

double MaxPinnedSinkError(std::size_t pinners, double owner_fairness) {
  const auto p = static_cast<double>(pinners);
  return (2.0 * p + 2.0 - 2.0 * owner_fairness) / (p + 2.0);
}

std::optional<double> PinnedSinkWeight(std::size_t pinners,
                                       double owner_fairness, double error) {
  if (error < -kSlack || error > MaxPinnedSinkError(pinners, owner_fairness) +
                                     kSlack) {
    return std::nullopt;
  }
  error = std::max(error, 0.0);
  const auto p = static_cast<double>(pinners);
  // Solves error = g(s) - w with g(s) from PinnedSinkGoodness.
  const double w = (p - error * (p + 2.0)) / (p + 2.0 - 2.0 * owner_fairness);
  return std::clamp(w, -1.0, 1.0);
}

NodeId AttachPinnedSink(Wsn& g, NodeId owner, double w, std::size_t pinners) {
  const NodeId sink = g.AddNode("sink" + std::to_string(g.node_count()));
  g.AddEdge(owner, sink, w);
  for (std::size_t i = 0; i < pinners; ++i) {
    const NodeId p = g.AddNode("pin" + std::to_string(g.node_count()));
    g.AddEdge(p, sink, 1.0);
  }
  return sink;
}

std::optional<FairnessPin> DesignFairnessPin(double target,
                                             double existing_error,
                                             std::size_t existing_outdeg,
                                             const GadgetParams& params) {
  if (!(target >= 0.0 && target <= 1.0)) return std::nullopt;
  const auto n0 = static_cast<double>(existing_outdeg);
  if (existing_outdeg > 0 &&
      std::abs(1.0 - existing_error / (2.0 * n0) - target) <= kSlack) {
    return FairnessPin{0, 0.0};
  }
  const double e_max = MaxPinnedSinkError(params.pinners, target);
  for (std::size_t q = 1; q <= params.max_sinks; ++q) {
    const auto qd = static_cast<double>(q);
    // f = 1 - (E + q e) / (2 (n0 + q))  solved for the per-sink error e.
    const double e = (2.0 * (n0 + qd) * (1.0 - target) - existing_error) / qd;
    if (e < -kSlack || e > e_max) continue;
    if (auto w = PinnedSinkWeight(params.pinners, target, e)) {
      return FairnessPin{q, *w};
    }
  }
  return std::nullopt;
}

GoodnessGadget BuildGoodnessGadget(std::span<const RaterGroup> groups,
                                   const GadgetParams& params) {
  double weighted = 0.0;
  double count = 0.0;
  for (const RaterGroup& grp : groups) {
    CheckUnit(grp.fairness, 0.0, 1.0, "rater fairness");
    CheckUnit(grp.rating, -1.0, 1.0, "rating");
    weighted += static_cast<double>(grp.size) * grp.fairness * grp.rating;
    count += static_cast<double>(grp.size);
  }
  if (count == 0.0) throw GadgetError("goodness gadget needs at least one rater");
  const double target_goodness = weighted / count;

  GoodnessGadget gadget;
  gadget.target = gadget.graph.AddNode("v");
  for (const RaterGroup& grp : groups) {
    const double error_on_target = std::abs(grp.rating - target_goodness);
    const auto pin = DesignFairnessPin(grp.fairness, error_on_target, 1, params);
    if (!pin) {
      throw GadgetError("rater fairness " + std::to_string(grp.fairness) +
                        " unrealizable with rating " +
                        std::to_string(grp.rating));
    }
    for (std::size_t i = 0; i < grp.size; ++i) {
      const NodeId r =
          gadget.graph.AddNode("r" + std::to_string(gadget.graph.node_count()));
      gadget.graph.AddEdge(r, gadget.target, grp.rating);
      for (std::size_t s = 0; s < pin->sinks; ++s) {
        AttachPinnedSink(gadget.graph, r, pin->weight, params.pinners);
      }
      gadget.raters.push_back(r);
      gadget.rater_fairness.push_back(grp.fairness);
    }
  }
  return gadget;
}

FairnessGadget BuildFairnessGadget(std::span<const double> errors,
                                   const GadgetParams& params) {
  FairnessGadget gadget;
  gadget.rater = gadget.graph.AddNode("v");
  if (errors.empty()) return gadget;
  double sum = 0.0;
  for (double d : errors) {
    CheckUnit(d, 0.0, 2.0, "rating error");
    sum += d;
  }
  const double fairness = 1.0 - sum / (2.0 * static_cast<double>(errors.size()));
  for (double d : errors) {
    const auto w = PinnedSinkWeight(params.pinners, fairness, d);
    if (!w) {
      throw GadgetError("rating error " + std::to_string(d) +
                        " unrealizable at a fixed point");
    }
    gadget.rated.push_back(
        AttachPinnedSink(gadget.graph, gadget.rater, *w, params.pinners));
    gadget.errors.push_back(d);
  }
  return gadget;
}

GoodnessMeasurement Measure(const GoodnessGadget& gadget) {
  const FgaScores s = ComputeFga(gadget.graph, GadgetFgaConfig());
  GoodnessMeasurement m;
  m.goodness = s.goodness[gadget.target];
  for (std::size_t i = 0; i < gadget.raters.size(); ++i) {
    m.fairness_deviation =
        std::max(m.fairness_deviation,
                 std::abs(s.fairness[gadget.raters[i]] - gadget.rater_fairness[i]));
  }
  return m;
}

FairnessMeasurement Measure(const FairnessGadget& gadget) {
  const FgaScores s = ComputeFga(gadget.graph, GadgetFgaConfig());
  FairnessMeasurement m;
  m.fairness = s.fairness[gadget.rater];
  for (std::size_t j = 0; j < gadget.rated.size(); ++j) {
    const NodeId u = gadget.rated[j];
    const double err = std::abs(*gadget.graph.Weight(gadget.rater, u) -
                                s.goodness[u]);
    m.error_deviation =
        std::max(m.error_deviation, std::abs(err - gadget.errors[j]));
  }
  return m;
}

double GoodnessWithFixedFairness(std::span<const RaterGroup> groups) {
  Wsn g;
  const NodeId v = g.AddNode("v");
  std::vector<double> fairness{1.0};
  for (const RaterGroup& grp : groups) {
    CheckUnit(grp.fairness, 0.0, 1.0, "rater fairness");
    CheckUnit(grp.rating, -1.0, 1.0, "rating");
    for (std::size_t i = 0; i < grp.size; ++i) {
      g.AddEdge(g.AddNode(), v, grp.rating);
      fairness.push_back(grp.fairness);
    }
  }
  std::vector<double> goodness(g.node_count());
  GoodnessPass(g, fairness, goodness);
  return goodness[v];
}

double FairnessWithFixedGoodness(std::span<const double> errors) {
  Wsn g;
  const NodeId v = g.AddNode("v");
  std::vector<double> goodness{1.0};
  for (double d : errors) {
    CheckUnit(d, 0.0, 2.0, "rating error");
    // Rating -1 against goodness d - 1 puts the error at exactly d.
    g.AddEdge(v, g.AddNode(), -1.0);
    goodness.push_back(d - 1.0);
  }
  std::vector<double> fairness(g.node_count());
  FairnessPass(g, goodness, fairness);
  return fairness[v];
}

}  // namespace fga
