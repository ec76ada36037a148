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

#include "fga/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "fga/attacks.h"
#include "fga/gadgets.h"
#include "fga/generators.h"
#include "fga/parallel.h"
#include "fga/random.h"

namespace fga {
namespace {

FgaConfig TightConfig() {
  return {.max_iterations = 1000, .residual_tolerance = 1e-13};
}

BoundReport Judge(BoundReport r) {
  r.satisfied = std::abs(r.observed_delta) <= r.bound_value + kBoundTolerance;
  return r;
}

std::vector<BoundReport> DirectSybilTrials(const Wsn& g, const FgaScores& base,
                                           const BoundTrialOptions& opts) {
  std::vector<NodeId> pool;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.InDegree(v) > 0) pool.push_back(v);
  }
  if (pool.empty()) throw BoundError("direct sybil: no node has a rater");
  constexpr std::size_t kWeights = std::size(kSybilWeights);
  std::vector<BoundReport> out(opts.trials * kWeights);
  ParallelFor(opts.trials, ResolveThreads(opts.threads),
              [&](std::size_t trial, unsigned) {
                Rng rng(DeriveSeed(opts.seed, {0, trial}));
                const NodeId t = pool[rng.Below(pool.size())];
                const double bound = DirectSybilBound(g, t);
                for (std::size_t j = 0; j < kWeights; ++j) {
                  Wsn attacked = g;
                  InjectSybil(attacked, t, kSybilWeights[j]);
                  const FgaScores after =
                      RecomputeAfter(attacked, base, TightConfig());
                  BoundReport r;
                  r.scenario = BoundScenario::kDirectSybil;
                  r.trial = trial;
                  r.target = t;
                  r.weight = kSybilWeights[j];
                  r.bound_value = bound;
                  r.observed_delta = after.goodness[t] - base.goodness[t];
                  out[trial * kWeights + j] = Judge(r);
                }
              });
  return out;
}

std::vector<BoundReport> IndirectSybilTrials(const Wsn& g,
                                             const FgaScores& base,
                                             const BoundTrialOptions& opts) {
  const MinKNeighbourCert cert = CheckMinKNeighbour(g, opts.k);
  if (!cert.holds) {
    throw BoundError("indirect sybil: not a minimum-" +
                     std::to_string(opts.k) + "-neighbour network");
  }
  if (g.node_count() < 2) throw BoundError("indirect sybil: graph too small");
  constexpr std::size_t kWeights = std::size(kSybilWeights);
  std::vector<BoundReport> out(opts.trials * kWeights);
  ParallelFor(
      opts.trials, ResolveThreads(opts.threads),
      [&](std::size_t trial, unsigned) {
        Rng rng(DeriveSeed(opts.seed, {1, trial}));
        const auto i = static_cast<NodeId>(rng.Below(g.node_count()));
        const double bound = IndirectSybilBound(g.InDegree(i), opts.k);
        for (std::size_t j = 0; j < kWeights; ++j) {
          Wsn attacked = g;
          InjectSybil(attacked, i, kSybilWeights[j]);
          const FgaScores after = RecomputeAfter(attacked, base, TightConfig());
          BoundReport r;
          r.scenario = BoundScenario::kIndirectSybil;
          r.trial = trial;
          r.intermediary = i;
          r.k = opts.k;
          r.weight = kSybilWeights[j];
          r.bound_value = bound;
          for (NodeId t = 0; t < g.node_count(); ++t) {
            if (t == i) continue;
            const double d = after.goodness[t] - base.goodness[t];
            if (r.target == kNoNode || std::abs(d) > std::abs(r.observed_delta)) {
              r.target = t;
              r.observed_delta = d;
            }
          }
          out[trial * kWeights + j] = Judge(r);
        }
      });
  return out;
}

// Star with influencer fairness pinned at 1 - delta. Stabilisers rate only
// x, so f(s) = (1 + g) / 2 and the fixed point solves
//   g = (k (1 - delta) + l / 2) / (k + l / 2).
struct StarDesign {
  double goodness = 1.0;
  FairnessPin pin;
};

std::optional<StarDesign> DesignStar(std::size_t k, std::size_t l,
                                     double delta, const GadgetParams& params) {
  const auto kd = static_cast<double>(k);
  const auto ld = static_cast<double>(l);
  StarDesign d;
  d.goodness = (kd * (1.0 - delta) + ld / 2.0) / (kd + ld / 2.0);
  auto pin = DesignFairnessPin(1.0 - delta, 1.0 - d.goodness, 1, params);
  if (!pin) return std::nullopt;
  d.pin = *pin;
  return d;
}

}  // namespace

std::string_view ReasonName(MinKViolation::Reason r) {
  switch (r) {
    case MinKViolation::Reason::kInDegree:
      return "indeg";
    case MinKViolation::Reason::kOutDegree:
      return "outdeg";
    case MinKViolation::Reason::kWeightMass:
      return "weight-mass";
  }
  return "?";
}

MinKNeighbourCert CheckMinKNeighbour(const Wsn& g, std::size_t k) {
  if (k == 0) throw BoundError("minimum-k-neighbour: k must be >= 1");
  MinKNeighbourCert cert;
  cert.k = k;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.InDegree(v) < k) {
      cert.violations.push_back({v, MinKViolation::Reason::kInDegree});
    }
    if (g.OutDegree(v) < k) {
      cert.violations.push_back({v, MinKViolation::Reason::kOutDegree});
    }
    double mass = 0.0;
    for (const Arc& a : g.InArcs(v)) mass += std::abs(a.weight);
    if (mass > static_cast<double>(k) + 1e-12) {
      cert.violations.push_back({v, MinKViolation::Reason::kWeightMass});
    }
  }
  cert.holds = cert.violations.empty();
  return cert;
}

double IndirectSybilBound(std::size_t intermediary_indeg, std::size_t k) {
  if (k == 0) throw BoundError("indirect sybil bound: k must be >= 1");
  return 2.0 / (static_cast<double>(intermediary_indeg + 1) *
                static_cast<double>(k));
}

double IndirectSybilBound(const Wsn& g, NodeId intermediary, std::size_t k) {
  if (!g.HasNode(intermediary)) {
    throw GraphError(GraphError::Kind::kUnknownNode,
                     "unknown intermediary " + std::to_string(intermediary));
  }
  if (!CheckMinKNeighbour(g, k).holds) {
    throw BoundError("indirect sybil bound: not a minimum-" +
                     std::to_string(k) + "-neighbour network");
  }
  return IndirectSybilBound(g.InDegree(intermediary), k);
}

double DirectSybilBound(std::size_t target_indeg) {
  if (target_indeg == 0) {
    throw BoundError("direct sybil bound: target has no raters");
  }
  return 2.0 / static_cast<double>(target_indeg);
}

double DirectSybilBound(const Wsn& g, NodeId target) {
  if (!g.HasNode(target)) {
    throw GraphError(GraphError::Kind::kUnknownNode,
                     "unknown target " + std::to_string(target));
  }
  return DirectSybilBound(g.InDegree(target));
}

std::size_t DirectFlipBudget(double target_goodness, std::size_t target_indeg) {
  if (!(target_goodness > 0.0)) {
    throw BoundError("flip budget: goodness already non-positive");
  }
  const double raw =
      2.0 * target_goodness * static_cast<double>(target_indeg);
  // Rounding noise must not push an integral product up by one.
  const double rounded = std::round(raw);
  const double c = std::abs(raw - rounded) < 1e-12 ? rounded : std::ceil(raw);
  return std::max<std::size_t>(1, static_cast<std::size_t>(c));
}

std::size_t DirectFlipBudget(const FgaScores& scores, const Wsn& g,
                             NodeId target) {
  if (!g.HasNode(target) || target >= scores.node_count()) {
    throw GraphError(GraphError::Kind::kUnknownNode,
                     "unknown target " + std::to_string(target));
  }
  return DirectFlipBudget(scores.goodness[target], g.InDegree(target));
}

double StabiliserLowerBound(std::size_t k, std::size_t l, double delta) {
  if (k + l == 0) throw BoundError("stabiliser bound: k = l = 0");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw BoundError("stabiliser bound: delta outside [0, 1]");
  }
  return 1.0 - 2.0 * delta * static_cast<double>(k) /
                   static_cast<double>(k + l);
}

BoundScenario ParseBoundScenario(std::string_view name) {
  if (name == "direct-sybil") return BoundScenario::kDirectSybil;
  if (name == "indirect-sybil") return BoundScenario::kIndirectSybil;
  if (name == "stabiliser" || name == "stabilizer") {
    return BoundScenario::kStabiliser;
  }
  throw std::invalid_argument("unknown bound scenario '" + std::string(name) +
                              "'");
}

std::string_view BoundScenarioName(BoundScenario s) {
  switch (s) {
    case BoundScenario::kDirectSybil:
      return "direct-sybil";
    case BoundScenario::kIndirectSybil:
      return "indirect-sybil";
    case BoundScenario::kStabiliser:
      return "stabiliser";
  }
  return "?";
}

std::vector<BoundReport> VerifyBoundEmpirically(const Wsn& g,
                                                BoundScenario scenario,
                                                const BoundTrialOptions& opts) {
  if (scenario == BoundScenario::kStabiliser) {
    throw BoundError("stabiliser scenario runs on its own gadget grid");
  }
  const FgaScores base = ComputeFga(g, TightConfig());
  if (scenario == BoundScenario::kDirectSybil) {
    return DirectSybilTrials(g, base, opts);
  }
  return IndirectSybilTrials(g, base, opts);
}

BoundReport MeasureStabiliser(std::size_t k, std::size_t l, double delta) {
  if (k + l == 0) throw BoundError("stabiliser: k = l = 0");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw BoundError("stabiliser: delta outside [0, 1]");
  }
  const GadgetParams params;
  std::optional<StarDesign> design =
      k == 0 ? std::optional<StarDesign>(StarDesign{})
             : DesignStar(k, l, delta, params);
  if (!design) {
    // Largest reachable drop below the requested one.
    double lo = 0.0;
    double hi = delta;
    for (int it = 0; it < 60; ++it) {
      const double mid = (lo + hi) / 2.0;
      (DesignStar(k, l, mid, params) ? lo : hi) = mid;
    }
    design = DesignStar(k, l, lo, params);
  }

  StabilisedStar star = GenerateStabilisedStar(k, l);
  for (NodeId inf : star.influencers) {
    for (std::size_t s = 0; s < design->pin.sinks; ++s) {
      AttachPinnedSink(star.graph, inf, design->pin.weight, params.pinners);
    }
  }
  const FgaScores after = ComputeFga(star.graph, GadgetFgaConfig());
  double realised = 0.0;
  for (NodeId inf : star.influencers) {
    realised = std::max(realised, 1.0 - after.fairness[inf]);
  }
  realised = std::clamp(realised, 0.0, 1.0);

  BoundReport r;
  r.scenario = BoundScenario::kStabiliser;
  r.target = star.center;
  r.k = k;
  r.l = l;
  r.weight = realised;
  r.bound_value = 1.0 - StabiliserLowerBound(k, l, realised);
  r.observed_delta = 1.0 - after.goodness[star.center];
  return Judge(r);
}

std::vector<BoundReport> VerifyStabiliserBound(std::span<const std::size_t> ks,
                                               std::span<const std::size_t> ls,
                                               std::span<const double> deltas) {
  std::vector<BoundReport> out;
  for (std::size_t k : ks) {
    for (std::size_t l : ls) {
      for (double d : deltas) {
        BoundReport r = MeasureStabiliser(k, l, d);
        r.trial = out.size();
        out.push_back(r);
      }
    }
  }
  return out;
}

std::vector<FlipReport> VerifyDirectFlip(const Wsn& g,
                                         const FlipOptions& opts) {
  const FgaScores base = ComputeFga(g, TightConfig());
  std::vector<NodeId> targets;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.InDegree(v) > 0 && base.goodness[v] > 0.0) targets.push_back(v);
  }
  if (targets.empty()) throw BoundError("flip: no target with g > 0");

  std::vector<FlipReport> out(opts.trials);
  ParallelFor(
      opts.trials, ResolveThreads(opts.threads),
      [&](std::size_t trial, unsigned) {
        Rng rng(DeriveSeed(opts.seed, {2, trial}));
        FlipReport rep;
        rep.trial = trial;
        for (std::size_t attempt = 0; attempt <= opts.max_resamples;
             ++attempt) {
          const NodeId t = targets[rng.Below(targets.size())];
          const std::size_t budget = DirectFlipBudget(base, g, t);
          std::vector<NodeId> pool;
          for (NodeId v = 0; v < g.node_count(); ++v) {
            if (v != t && !g.HasEdge(v, t)) pool.push_back(v);
          }
          if (pool.size() <= budget) continue;
          std::vector<NodeId> attackers;
          for (std::size_t idx : rng.SampleIndices(pool.size(), budget + 1)) {
            attackers.push_back(pool[idx]);
          }
          AttackConfig cfg;
          cfg.fga = TightConfig();
          const AttackResult res = DirectAttack(g, attackers, t, cfg);
          double min_f = 1.0;
          for (NodeId a : attackers) {
            min_f = std::min(min_f, res.outcome.after.fairness[a]);
          }
          if (min_f < 0.5) {
            ++rep.resampled;
            continue;
          }
          rep.target = t;
          rep.budget = budget;
          rep.attackers = attackers.size();
          rep.goodness_before = base.goodness[t];
          rep.goodness_after = res.outcome.after.goodness[t];
          rep.min_attacker_fairness = min_f;
          rep.flipped = rep.goodness_after < 0.0;
          out[trial] = rep;
          return;
        }
        throw BoundError("flip: no instance with attacker fairness >= 1/2 in " +
                         std::to_string(opts.max_resamples + 1) + " draws");
      });
  return out;
}

void WriteBoundReportsCsv(std::ostream& os, std::span<const BoundReport> rows) {
  os << "scenario,trial,target,intermediary,k,l,weight,bound_value,"
        "observed_delta,satisfied\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  auto node = [](NodeId v) {
    return v == kNoNode ? std::string() : std::to_string(v);
  };
  for (const BoundReport& r : rows) {
    os << BoundScenarioName(r.scenario) << ',' << r.trial << ','
       << node(r.target) << ',' << node(r.intermediary) << ',' << r.k << ','
       << r.l << ',' << num(r.weight) << ',' << num(r.bound_value) << ','
       << num(r.observed_delta) << ',' << (r.satisfied ? "true" : "false")
       << '\n';
  }
}

}  // namespace fga
