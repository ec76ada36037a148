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

#include "fga/axioms.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "fga/engine.h"
#include "fga/generators.h"
#include "fga/parallel.h"

namespace fga {
namespace {

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void Expect(AxiomVerdict& v, bool ok, const std::string& what) {
  if (ok) return;
  if (v.holds) v.first_failure = what;
  v.holds = false;
}

void ExpectNear(AxiomVerdict& v, double got, double want, double tol,
                const std::string& what) {
  const double err = std::abs(got - want);
  v.max_abs_error = std::max(v.max_abs_error, err);
  Expect(v, err <= tol, what + ": " + Fmt(got) + " vs " + Fmt(want));
}

// Goodness of a target rated by `groups`, in fixed and gadget mode.
struct GoodnessEval {
  double fixed = 0.0;
  std::optional<double> gadget;
};

GoodnessEval EvalGoodness(std::span<const RaterGroup> groups,
                          const AxiomOptions& opts, AxiomVerdict& v) {
  GoodnessEval out;
  out.fixed = GoodnessWithFixedFairness(groups);
  try {
    const GoodnessGadget gadget = BuildGoodnessGadget(groups, opts.gadget);
    const GoodnessMeasurement m = Measure(gadget);
    ExpectNear(v, m.fairness_deviation, 0.0, opts.tolerance,
               "realised rater fairness");
    ExpectNear(v, m.goodness, out.fixed, opts.tolerance,
               "gadget goodness vs closed form");
    out.gadget = m.goodness;
  } catch (const GadgetError&) {
  }
  return out;
}

GoodnessEval EvalGoodness(RaterGroup group, const AxiomOptions& opts,
                          AxiomVerdict& v) {
  return EvalGoodness(std::span<const RaterGroup>(&group, 1), opts, v);
}

struct FairnessEval {
  double fixed = 0.0;
  std::optional<double> gadget;
};

FairnessEval EvalFairness(std::span<const double> errors,
                          const AxiomOptions& opts, AxiomVerdict& v) {
  FairnessEval out;
  out.fixed = FairnessWithFixedGoodness(errors);
  try {
    const FairnessGadget gadget = BuildFairnessGadget(errors, opts.gadget);
    const FairnessMeasurement m = Measure(gadget);
    ExpectNear(v, m.error_deviation, 0.0, opts.tolerance, "realised error");
    ExpectNear(v, m.fairness, out.fixed, opts.tolerance,
               "gadget fairness vs closed form");
    out.gadget = m.fairness;
  } catch (const GadgetError&) {
  }
  return out;
}

std::vector<double> Repeat(double d, std::size_t n) {
  return std::vector<double>(n, d);
}

// Runs the identity lhs == rhs in fixed mode and, when all parts are
// realisable, in gadget mode.
void ExpectIdentity(AxiomVerdict& v, double fixed_lhs, double fixed_rhs,
                    std::optional<double> gadget_lhs,
                    std::optional<double> gadget_rhs, double tol,
                    const std::string& what) {
  ++v.fixed_cases;
  ExpectNear(v, fixed_lhs, fixed_rhs, tol, what + " (fixed)");
  if (gadget_lhs && gadget_rhs) {
    ++v.gadget_cases;
    ExpectNear(v, *gadget_lhs, *gadget_rhs, tol, what + " (gadget)");
  }
}

std::optional<double> Sum(std::optional<double> a, std::optional<double> b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

void AxiomVerdict::Merge(const AxiomVerdict& other) {
  if (holds && !other.holds) first_failure = other.first_failure;
  holds = holds && other.holds;
  fixed_cases += other.fixed_cases;
  gadget_cases += other.gadget_cases;
  max_abs_error = std::max(max_abs_error, other.max_abs_error);
}

AxiomVerdict CheckSmoothGoodness(double f0, double delta, double omega0,
                                 std::size_t raters, const AxiomOptions& opts) {
  if (!(f0 >= 0.0 && delta >= 0.0 && f0 + delta <= 1.0 && raters > 0 &&
        std::abs(omega0) <= 1.0)) {
    throw std::invalid_argument("smooth goodness: parameters out of domain");
  }
  AxiomVerdict v;
  const auto whole = EvalGoodness({raters, f0 + delta, omega0}, opts, v);
  const auto a = EvalGoodness({raters, f0, omega0}, opts, v);
  const auto b = EvalGoodness({raters, delta, omega0}, opts, v);
  ExpectIdentity(v, whole.fixed, a.fixed + b.fixed, whole.gadget,
                 Sum(a.gadget, b.gadget), opts.tolerance,
                 "smooth goodness f0=" + Fmt(f0) + " delta=" + Fmt(delta) +
                     " w0=" + Fmt(omega0));
  ExpectNear(v, whole.fixed, (f0 + delta) * omega0, opts.tolerance,
             "closed form f*w");
  return v;
}

AxiomVerdict CheckIncreaseWeight(double f0, double omega0, double delta,
                                 std::size_t raters, const AxiomOptions& opts) {
  if (!(f0 >= 0.0 && f0 <= 1.0 && raters > 0 && std::abs(omega0) <= 1.0 &&
        std::abs(delta) <= 1.0 && std::abs(omega0 + delta) <= 1.0)) {
    throw std::invalid_argument("increase weight: parameters out of domain");
  }
  AxiomVerdict v;
  const auto whole = EvalGoodness({raters, f0, omega0 + delta}, opts, v);
  const auto a = EvalGoodness({raters, f0, omega0}, opts, v);
  const auto b = EvalGoodness({raters, f0, delta}, opts, v);
  ExpectIdentity(v, whole.fixed, a.fixed + b.fixed, whole.gadget,
                 Sum(a.gadget, b.gadget), opts.tolerance,
                 "increase weight f0=" + Fmt(f0) + " w0=" + Fmt(omega0) +
                     " delta=" + Fmt(delta));
  return v;
}

AxiomVerdict CheckGoodnessOrder(const RaterGroup& first,
                                const RaterGroup& second,
                                const AxiomOptions& opts) {
  const bool same_fairness = first.fairness == second.fairness;
  const bool same_rating = first.rating == second.rating;
  if (first.size != second.size || !(same_fairness || same_rating)) {
    throw std::invalid_argument(
        "goodness order: groups must share size and fairness or rating");
  }
  AxiomVerdict v;
  const auto g1 = EvalGoodness(first, opts, v);
  const auto g2 = EvalGoodness(second, opts, v);
  const std::string tag = "f=" + Fmt(first.fairness) + "/" +
                          Fmt(second.fairness) + " w=" + Fmt(first.rating) +
                          "/" + Fmt(second.rating);
  auto check = [&](double a, double b, const char* mode) {
    if (same_fairness) {
      // Higher rating never lowers goodness.
      if (first.rating >= second.rating) {
        Expect(v, a >= b - opts.tolerance, std::string("rating order ") +
                                               mode + " " + tag);
      } else {
        Expect(v, b >= a - opts.tolerance, std::string("rating order ") +
                                               mode + " " + tag);
      }
    }
    if (same_rating) {
      const bool first_fairer = first.fairness >= second.fairness;
      const double hi = first_fairer ? a : b;
      const double lo = first_fairer ? b : a;
      if (first.rating >= 0.0) {
        Expect(v, hi >= lo - opts.tolerance,
               std::string("fairness order ") + mode + " " + tag);
      } else {
        // A fairer rater has the larger impact, in either direction.
        Expect(v, std::abs(hi) >= std::abs(lo) - opts.tolerance,
               std::string("fairness magnitude order ") + mode + " " + tag);
      }
    }
  };
  ++v.fixed_cases;
  check(g1.fixed, g2.fixed, "(fixed)");
  if (g1.gadget && g2.gadget) {
    ++v.gadget_cases;
    check(*g1.gadget, *g2.gadget, "(gadget)");
  }
  return v;
}

AxiomVerdict CheckMonotonicityGoodness(std::size_t samples, Rng& rng,
                                       const AxiomOptions& opts) {
  AxiomVerdict v;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t size = 1 + rng.Below(3);
    RaterGroup a{size, 0.0, 0.0};
    RaterGroup b = a;
    if (rng.Bernoulli(0.5)) {
      a.fairness = b.fairness = rng.Uniform(0.05, 1.0);
      a.rating = rng.Uniform(-1.0, 1.0);
      b.rating = rng.Uniform(-1.0, 1.0);
    } else {
      a.rating = b.rating = rng.Uniform(-1.0, 1.0);
      a.fairness = rng.Uniform(0.05, 1.0);
      b.fairness = rng.Uniform(0.05, 1.0);
    }
    v.Merge(CheckGoodnessOrder(a, b, opts));
  }
  return v;
}

AxiomVerdict CheckMaximalTrust(std::size_t raters, const AxiomOptions& opts) {
  if (raters == 0) throw std::invalid_argument("maximal trust: no raters");
  AxiomVerdict v;
  const auto g = EvalGoodness({raters, 1.0, 1.0}, opts, v);
  ExpectIdentity(v, g.fixed, 1.0, g.gadget, 1.0, opts.tolerance,
                 "maximal trust with " + std::to_string(raters) + " raters");
  return v;
}

AxiomVerdict CheckGoodnessBaseline(const Wsn& g, const AxiomOptions& opts) {
  AxiomVerdict v;
  const std::vector<double> half(g.node_count(), 0.5);
  std::vector<double> pass(g.node_count());
  GoodnessPass(g, half, pass);
  const FgaScores s = ComputeFga(g, GadgetFgaConfig());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.InDegree(u) != 0) continue;
    ExpectIdentity(v, pass[u], 1.0, s.goodness[u], 1.0, opts.tolerance,
                   "unrated node " + g.Label(u));
  }
  return v;
}

AxiomVerdict CheckFairnessBaseline(const Wsn& g, const AxiomOptions& opts) {
  AxiomVerdict v;
  const std::vector<double> zero(g.node_count(), 0.0);
  std::vector<double> pass(g.node_count());
  FairnessPass(g, zero, pass);
  const FgaScores s = ComputeFga(g, GadgetFgaConfig());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.OutDegree(u) != 0) continue;
    ExpectIdentity(v, pass[u], 1.0, s.fairness[u], 1.0, opts.tolerance,
                   "non-rating node " + g.Label(u));
  }
  return v;
}

AxiomVerdict CheckMaximalTrustAndBaselines(const AxiomOptions& opts) {
  AxiomVerdict v = CheckMaximalTrust(5, opts);
  Wsn g(3);
  g.AddEdge(0, 1, -0.5);
  v.Merge(CheckGoodnessBaseline(g, opts));
  v.Merge(CheckFairnessBaseline(g, opts));
  return v;
}

AxiomVerdict CheckGroupsGoodness(std::span<const RaterGroup> groups,
                                 const AxiomOptions& opts) {
  if (groups.empty()) throw std::invalid_argument("groups goodness: empty");
  AxiomVerdict v;
  const auto whole = EvalGoodness(groups, opts, v);
  double fixed_sum = 0.0;
  double gadget_sum = 0.0;
  bool gadget_ok = whole.gadget.has_value();
  double count = 0.0;
  for (const RaterGroup& grp : groups) {
    if (grp.size == 0) throw std::invalid_argument("groups goodness: empty group");
    const auto part = EvalGoodness(grp, opts, v);
    const auto c = static_cast<double>(grp.size);
    fixed_sum += c * part.fixed;
    if (part.gadget) {
      gadget_sum += c * *part.gadget;
    } else {
      gadget_ok = false;
    }
    count += c;
  }
  ExpectIdentity(v, whole.fixed, fixed_sum / count,
                 gadget_ok ? whole.gadget : std::nullopt,
                 gadget_sum / count, opts.tolerance,
                 "groups goodness over " + std::to_string(groups.size()) +
                     " groups");
  return v;
}

AxiomVerdict CheckSmoothFairness(double d, double big_d, std::size_t rated,
                                 const AxiomOptions& opts) {
  if (!(d >= 0.0 && d <= 2.0 && big_d >= 0.0 && big_d <= 2.0 && rated > 0)) {
    throw std::invalid_argument("smooth fairness: parameters out of domain");
  }
  AxiomVerdict v;
  const auto mid = EvalFairness(Repeat((d + big_d) / 2.0, rated), opts, v);
  const auto a = EvalFairness(Repeat(d, rated), opts, v);
  const auto b = EvalFairness(Repeat(big_d, rated), opts, v);
  std::optional<double> avg;
  if (a.gadget && b.gadget) avg = (*a.gadget + *b.gadget) / 2.0;
  ExpectIdentity(v, mid.fixed, (a.fixed + b.fixed) / 2.0, mid.gadget, avg,
                 opts.tolerance,
                 "smooth fairness d=" + Fmt(d) + " D=" + Fmt(big_d));
  ExpectNear(v, a.fixed, 1.0 - d / 2.0, opts.tolerance, "closed form 1-d/2");
  return v;
}

AxiomVerdict CheckMonotonicityFairness(double d1, std::size_t n1, double d2,
                                       std::size_t n2,
                                       const AxiomOptions& opts) {
  if (!(d1 >= 0.0 && d1 <= 2.0 && d2 >= 0.0 && d2 <= 2.0 && n1 > 0 &&
        n2 > 0)) {
    throw std::invalid_argument("fairness order: parameters out of domain");
  }
  AxiomVerdict v;
  const auto f1 = EvalFairness(Repeat(d1, n1), opts, v);
  const auto f2 = EvalFairness(Repeat(d2, n2), opts, v);
  const std::string tag = "d=" + Fmt(d1) + "/" + Fmt(d2);
  auto check = [&](double a, double b, const char* mode) {
    if (d1 > d2) Expect(v, a <= b + opts.tolerance, "fairness order " + tag + mode);
    if (d2 > d1) Expect(v, b <= a + opts.tolerance, "fairness order " + tag + mode);
    if (d1 == d2) ExpectNear(v, a, b, opts.tolerance, "fairness tie " + tag + mode);
  };
  ++v.fixed_cases;
  check(f1.fixed, f2.fixed, " (fixed)");
  if (f1.gadget && f2.gadget) {
    ++v.gadget_cases;
    check(*f1.gadget, *f2.gadget, " (gadget)");
  }
  return v;
}

AxiomVerdict CheckObviousFairness(std::size_t rated, const AxiomOptions& opts) {
  if (rated == 0) throw std::invalid_argument("obvious fairness: no successors");
  AxiomVerdict v;
  const auto exact = EvalFairness(Repeat(0.0, rated), opts, v);
  ExpectIdentity(v, exact.fixed, 1.0, exact.gadget, 1.0, opts.tolerance,
                 "zero error");
  // Error 2 has no fixed-point realisation; gadget mode is skipped.
  const auto worst = EvalFairness(Repeat(2.0, rated), opts, v);
  ExpectIdentity(v, worst.fixed, 0.0, worst.gadget, 0.0, opts.tolerance,
                 "maximal error");
  return v;
}

AxiomVerdict CheckGroupsFairness(std::span<const ErrorGroup> groups,
                                 const AxiomOptions& opts) {
  if (groups.empty()) throw std::invalid_argument("groups fairness: empty");
  AxiomVerdict v;
  std::vector<double> all;
  for (const ErrorGroup& grp : groups) {
    if (grp.size == 0) {
      throw std::invalid_argument("groups fairness: empty group");
    }
    all.insert(all.end(), grp.size, grp.error);
  }
  const auto whole = EvalFairness(all, opts, v);
  double fixed_sum = 0.0;
  double gadget_sum = 0.0;
  bool gadget_ok = whole.gadget.has_value();
  for (const ErrorGroup& grp : groups) {
    const auto part = EvalFairness(Repeat(grp.error, grp.size), opts, v);
    const auto c = static_cast<double>(grp.size);
    fixed_sum += c * part.fixed;
    if (part.gadget) {
      gadget_sum += c * *part.gadget;
    } else {
      gadget_ok = false;
    }
  }
  const auto count = static_cast<double>(all.size());
  ExpectIdentity(v, whole.fixed, fixed_sum / count,
                 gadget_ok ? whole.gadget : std::nullopt, gadget_sum / count,
                 opts.tolerance,
                 "groups fairness over " + std::to_string(groups.size()) +
                     " groups");
  return v;
}

AxiomVerdict CheckFairnessAxioms(std::size_t samples, Rng& rng,
                                 const AxiomOptions& opts) {
  AxiomVerdict v;
  for (std::size_t i = 0; i < samples; ++i) {
    v.Merge(CheckSmoothFairness(rng.Uniform(0.0, 2.0), rng.Uniform(0.0, 2.0),
                                1 + rng.Below(3), opts));
    v.Merge(CheckMonotonicityFairness(rng.Uniform(0.0, 2.0), 1 + rng.Below(3),
                                      rng.Uniform(0.0, 2.0), 1 + rng.Below(3),
                                      opts));
    v.Merge(CheckObviousFairness(1 + rng.Below(4), opts));
    std::vector<ErrorGroup> groups(1 + rng.Below(3));
    for (ErrorGroup& grp : groups) {
      grp.size = 1 + rng.Below(3);
      grp.error = rng.Uniform(0.0, 2.0);
    }
    v.Merge(CheckGroupsFairness(groups, opts));
  }
  return v;
}

namespace {

// Random sparse graph plus one isolated node, so both baselines are hit.
Wsn BaselineGraph(Rng& rng) {
  const std::size_t n = 5 + rng.Below(26);
  Wsn g = GenerateRandom(n, rng.Below(n + 1), 0.7, rng.engine()());
  g.AddNode();
  return g;
}

using DrawFn = std::function<AxiomVerdict(Rng&, const AxiomOptions&)>;

struct AxiomDef {
  int number;
  const char* name;
  DrawFn draw;
};

std::vector<AxiomDef> Definitions() {
  return {
      {1, "smooth goodness",
       [](Rng& r, const AxiomOptions& o) {
         const double f0 = r.Uniform(0.0, 1.0);
         const double delta = r.Uniform(0.0, 1.0 - f0);
         return CheckSmoothGoodness(f0, delta, r.Uniform(-1.0, 1.0),
                                    1 + r.Below(3), o);
       }},
      {2, "increase weight",
       [](Rng& r, const AxiomOptions& o) {
         const double w0 = r.Uniform(-1.0, 1.0);
         const double delta = r.Uniform(-1.0 - std::min(w0, 0.0),
                                        1.0 - std::max(w0, 0.0));
         return CheckIncreaseWeight(r.Uniform(0.0, 1.0), w0, delta,
                                    1 + r.Below(3), o);
       }},
      {3, "monotonicity for goodness",
       [](Rng& r, const AxiomOptions& o) {
         return CheckMonotonicityGoodness(1, r, o);
       }},
      {4, "maximal trust",
       [](Rng& r, const AxiomOptions& o) {
         return CheckMaximalTrust(1 + r.Below(8), o);
       }},
      {5, "groups for goodness",
       [](Rng& r, const AxiomOptions& o) {
         std::vector<RaterGroup> groups(1 + r.Below(4));
         for (RaterGroup& grp : groups) {
           grp.size = 1 + r.Below(3);
           grp.fairness = r.Uniform(0.05, 1.0);
           grp.rating = r.Uniform(-1.0, 1.0);
         }
         return CheckGroupsGoodness(groups, o);
       }},
      {6, "goodness baseline",
       [](Rng& r, const AxiomOptions& o) {
         return CheckGoodnessBaseline(BaselineGraph(r), o);
       }},
      {7, "smooth fairness",
       [](Rng& r, const AxiomOptions& o) {
         return CheckSmoothFairness(r.Uniform(0.0, 2.0), r.Uniform(0.0, 2.0),
                                    1 + r.Below(3), o);
       }},
      {8, "monotonicity for fairness",
       [](Rng& r, const AxiomOptions& o) {
         return CheckMonotonicityFairness(r.Uniform(0.0, 2.0), 1 + r.Below(3),
                                          r.Uniform(0.0, 2.0), 1 + r.Below(3),
                                          o);
       }},
      {9, "obvious fairness metric",
       [](Rng& r, const AxiomOptions& o) {
         return CheckObviousFairness(1 + r.Below(4), o);
       }},
      {10, "groups for fairness",
       [](Rng& r, const AxiomOptions& o) {
         std::vector<ErrorGroup> groups(1 + r.Below(3));
         for (ErrorGroup& grp : groups) {
           grp.size = 1 + r.Below(3);
           grp.error = r.Uniform(0.0, 2.0);
         }
         return CheckGroupsFairness(groups, o);
       }},
      {11, "fairness baseline",
       [](Rng& r, const AxiomOptions& o) {
         return CheckFairnessBaseline(BaselineGraph(r), o);
       }},
  };
}

}  // namespace

std::vector<AxiomReport> RunAxiomSuite(const AxiomSuiteConfig& cfg) {
  std::vector<AxiomReport> out;
  const unsigned threads = ResolveThreads(cfg.threads);
  for (const AxiomDef& def : Definitions()) {
    std::vector<AxiomVerdict> slots(cfg.draws);
    ParallelFor(cfg.draws, threads, [&](std::size_t i, unsigned) {
      Rng rng(DeriveSeed(cfg.seed, {static_cast<std::uint64_t>(def.number), i}));
      slots[i] = def.draw(rng, cfg.options);
    });
    AxiomReport report{def.number, def.name, cfg.draws, {}};
    for (const AxiomVerdict& s : slots) report.verdict.Merge(s);
    out.push_back(std::move(report));
  }
  return out;
}

nlohmann::json AxiomReportsToJson(std::span<const AxiomReport> reports) {
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  for (const AxiomReport& r : reports) {
    all = all && r.verdict.holds;
    nlohmann::json row = {
        {"axiom", r.number},
        {"name", r.name},
        {"draws", r.draws},
        {"pass", r.verdict.holds},
        {"fixed_cases", r.verdict.fixed_cases},
        {"gadget_cases", r.verdict.gadget_cases},
        {"max_abs_error", r.verdict.max_abs_error},
    };
    if (!r.verdict.holds) row["first_failure"] = r.verdict.first_failure;
    rows.push_back(std::move(row));
  }
  return {{"all_pass", all}, {"axioms", rows}};
}

}  // namespace fga
