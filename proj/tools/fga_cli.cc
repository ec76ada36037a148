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

// fga: fairness/goodness scores, attacks, bounds and campaigns.
//
// Exit codes: 0 success, 2 invalid configuration, 3 insufficient data,
// 4 invariant violation.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fga/attacks.h"
#include "fga/axioms.h"
#include "fga/bounds.h"
#include "fga/campaign.h"
#include "fga/engine.h"
#include "fga/exhaustive.h"
#include "fga/generators.h"
#include "fga/io.h"
#include "fga/random.h"
#include "fga/selection.h"
#include "fga/wsn.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitInvariant = 4;

// Insufficient or missing input data.
class MissingData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::string data_dir;
  std::string out_dir;
  std::string format = "csv";
  unsigned threads = 1;
};

struct GraphSource {
  std::string dataset;
  std::string input;
  double scale = 1.0;
  std::string generator;
  std::size_t n = 100;
  std::size_t k = 3;
  std::size_t l = 0;
  std::size_t m = 500;
  double positive_fraction = 0.8;
};

void AddGraphOptions(CLI::App* app, GraphSource& src) {
  app->add_option("--dataset", src.dataset,
                  "bitcoin-otc, bitcoin-alpha or rfa (found in the data dir)");
  app->add_option("--input", src.input, "rating CSV source,target,rating[,time]");
  app->add_option("--rating-scale", src.scale,
                  "largest absolute raw rating in --input")
      ->check(CLI::PositiveNumber);
  app->add_option("--generator", src.generator,
                  "min-k-neighbour, stabilised-star, complete-positive, "
                  "random-erdos");
  app->add_option("--n", src.n, "generated node count");
  app->add_option("--gen-k", src.k, "generator degree / influencer count");
  app->add_option("--gen-l", src.l, "stabiliser count");
  app->add_option("--m", src.m, "random-graph edge count");
  app->add_option("--positive-fraction", src.positive_fraction,
                  "random-graph positive edge share")
      ->check(CLI::Range(0.0, 1.0));
}

bool HasSource(const GraphSource& src) {
  return !src.dataset.empty() || !src.input.empty() || !src.generator.empty();
}

fga::Wsn LoadGraph(const GraphSource& src, const Globals& g,
                   std::string* name = nullptr) {
  const int given = int(!src.dataset.empty()) + int(!src.input.empty()) +
                    int(!src.generator.empty());
  if (given != 1) {
    throw std::invalid_argument(
        "give exactly one of --dataset, --input, --generator");
  }
  if (!src.dataset.empty()) {
    const auto info = fga::LookupDataset(src.dataset);
    if (!info) throw std::invalid_argument("unknown dataset " + src.dataset);
    std::optional<std::filesystem::path> dir;
    if (!g.data_dir.empty()) dir = g.data_dir;
    const auto path = fga::FindDataset(src.dataset, dir);
    if (!path) {
      throw MissingData("dataset " + src.dataset + " not found (" +
                        std::string(info->file) +
                        "); set --data-dir or FGA_DATA_DIR");
    }
    if (name) *name = src.dataset;
    return fga::LoadRatingCsv(*path, fga::RatingScale(info->r_max));
  }
  if (!src.input.empty()) {
    if (name) *name = std::filesystem::path(src.input).stem().string();
    return fga::LoadRatingCsv(src.input, fga::RatingScale(src.scale));
  }
  fga::GeneratorParams params;
  params.kind = fga::ParseGeneratorKind(src.generator);
  params.n = src.n;
  params.k = src.k;
  params.l = src.l;
  params.m = src.m;
  params.positive_fraction = src.positive_fraction;
  params.seed = g.seed;
  if (name) *name = src.generator;
  return fga::Generate(params);
}

// Writes to --out-dir/<file> when set, else to stdout.
void Emit(const Globals& g, const std::string& file, const std::string& body) {
  if (g.out_dir.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return;
  }
  std::filesystem::create_directories(g.out_dir);
  const auto path = std::filesystem::path(g.out_dir) / file;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << body;
  if (!body.empty() && body.back() != '\n') os << '\n';
  std::cerr << "wrote " << path.string() << '\n';
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

fga::NodeId ResolveNode(const fga::Wsn& graph, const std::string& label) {
  if (auto id = graph.FindLabel(label)) return *id;
  throw std::invalid_argument("unknown node label '" + label + "'");
}

std::vector<fga::NodeId> ResolveNodes(const fga::Wsn& graph,
                                      const std::vector<std::string>& labels) {
  std::vector<fga::NodeId> out;
  for (const auto& l : labels) out.push_back(ResolveNode(graph, l));
  return out;
}

// "1-7" or "1,2,5".
std::vector<std::size_t> ParseRange(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoul(part));
      } else {
        const std::size_t lo = std::stoul(part.substr(0, dash));
        const std::size_t hi = std::stoul(part.substr(dash + 1));
        if (hi < lo) throw std::invalid_argument("empty range");
        for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad range '" + text + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty range '" + text + "'");
  return out;
}

json MovesJson(const fga::Wsn& graph, const std::vector<fga::AttackMove>& moves) {
  json arr = json::array();
  for (const auto& m : moves) {
    arr.push_back(
        {{"kind", m.kind == fga::AttackMove::Kind::kEdgeAddition ? "add"
                                                                  : "update"},
         {"attacker", graph.Label(m.attacker)},
         {"rated", graph.Label(m.rated)},
         {"weight", m.weight}});
  }
  return arr;
}

// ---- compute -------------------------------------------------------------

struct ComputeArgs {
  GraphSource src;
  int max_iterations = 100;
  double tolerance = 1e-8;
};

int RunCompute(const Globals& g, const ComputeArgs& a) {
  const fga::Wsn graph = LoadGraph(a.src, g);
  const fga::FgaConfig cfg{a.max_iterations, a.tolerance};
  const fga::FgaScores s = fga::ComputeFga(graph, cfg);
  if (g.format == "json") {
    json nodes = json::array();
    for (fga::NodeId v = 0; v < graph.node_count(); ++v) {
      nodes.push_back({{"node", graph.Label(v)},
                       {"fairness", s.fairness[v]},
                       {"goodness", s.goodness[v]}});
    }
    Emit(g, "scores.json",
         Dump({{"iterations", s.iterations_run},
               {"max_residual", s.max_residual},
               {"converged", s.Converged(cfg)},
               {"nodes", nodes}}));
  } else {
    std::ostringstream os;
    fga::WriteScoresCsv(os, graph, s);
    Emit(g, "scores.csv", os.str());
  }
  return kExitOk;
}

// ---- predict -------------------------------------------------------------

struct PredictArgs {
  GraphSource src;
  std::vector<std::string> pairs;
};

int RunPredict(const Globals& g, const PredictArgs& a) {
  const fga::Wsn graph = LoadGraph(a.src, g);
  const fga::FgaScores s = fga::ComputeFga(graph);
  if (a.pairs.size() % 2 != 0) {
    throw std::invalid_argument("--pair takes source and target labels");
  }
  json rows = json::array();
  std::ostringstream csv;
  csv << "source,target,prediction\n";
  for (std::size_t i = 0; i < a.pairs.size(); i += 2) {
    const fga::NodeId u = ResolveNode(graph, a.pairs[i]);
    const fga::NodeId v = ResolveNode(graph, a.pairs[i + 1]);
    const double p = fga::PredictWeight(s, u, v);
    rows.push_back({{"source", a.pairs[i]},
                    {"target", a.pairs[i + 1]},
                    {"prediction", p}});
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", p);
    csv << a.pairs[i] << ',' << a.pairs[i + 1] << ',' << buf << '\n';
  }
  if (g.format == "json") {
    Emit(g, "predictions.json", Dump(rows));
  } else {
    Emit(g, "predictions.csv", csv.str());
  }
  return kExitOk;
}

// ---- stats ---------------------------------------------------------------

int RunStats(const Globals& g, const GraphSource& src) {
  std::string name;
  const fga::Wsn graph = LoadGraph(src, g, &name);
  const fga::FgaScores s = fga::ComputeFga(graph);
  json j = fga::StatsToJson(fga::ComputeStats(graph, s));
  j["dataset"] = name;
  if (g.format == "json") {
    Emit(g, "stats.json", Dump(j));
  } else {
    std::ostringstream os;
    os << "field,value\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object()) continue;
      os << it.key() << ','
         << (it.value().is_string() ? it.value().get<std::string>()
                                    : it.value().dump())
         << '\n';
    }
    Emit(g, "stats.csv", os.str());
  }
  return kExitOk;
}

// ---- axioms --------------------------------------------------------------

int RunAxioms(const Globals& g, std::size_t draws) {
  fga::AxiomSuiteConfig cfg;
  cfg.draws = draws;
  cfg.seed = g.seed;
  cfg.threads = g.threads;
  const auto reports = fga::RunAxiomSuite(cfg);
  json j = fga::AxiomReportsToJson(reports);
  j["seed"] = g.seed;
  Emit(g, "axioms.json", Dump(j));
  return j["all_pass"].get<bool>() ? kExitOk : kExitInvariant;
}

// ---- attack --------------------------------------------------------------

struct AttackArgs {
  GraphSource src;
  std::string mode = "direct";
  std::string target;
  std::vector<std::string> attackers;
  std::size_t k = 1;
  std::size_t k1 = 1;
  std::size_t k2 = 1;
  std::size_t scale = 5;
  std::size_t max_edges = 10;
  std::string attacker_class = "established";
  bool cold = false;
  std::string out;
  // Exhaustive only.
  std::size_t budget = 1;
  double threshold = 0.0;
  std::vector<std::string> intermediaries;
};

int RunAttack(const Globals& g, const AttackArgs& a) {
  const fga::Wsn graph = LoadGraph(a.src, g);
  const fga::FgaScores base = fga::ComputeFga(graph);
  fga::SelectionCriteria crit;
  crit.attacker_class = fga::ParseAttackerClass(a.attacker_class);
  fga::Rng rng(fga::DeriveSeed(g.seed, {0xA77AC4}));

  const fga::NodeId t = a.target.empty()
                            ? fga::SelectTargets(graph, base, crit, 1, rng)[0]
                            : ResolveNode(graph, a.target);
  const fga::NodeId exclude[] = {t};
  std::size_t needed = a.k;
  if (a.mode == "mixed") needed = a.k1 + a.k2;
  std::vector<fga::NodeId> attackers =
      a.attackers.empty()
          ? fga::SelectAttackers(graph, base, crit, needed, rng, exclude)
          : ResolveNodes(graph, a.attackers);

  fga::AttackConfig cfg;
  cfg.cold = a.cold;
  cfg.threads = g.threads;
  json j = {{"mode", a.mode},
            {"seed", g.seed},
            {"target", graph.Label(t)},
            {"attackers", json::array()}};
  for (fga::NodeId v : attackers) j["attackers"].push_back(graph.Label(v));

  if (a.mode == "exhaustive") {
    fga::AttackProblem p;
    p.graph = graph;
    p.attackers = attackers;
    p.targets = {t};
    p.budget = a.budget;
    p.threshold = a.threshold;
    if (a.intermediaries.empty()) {
      for (fga::NodeId v = 0; v < graph.node_count(); ++v) {
        if (v != t) p.intermediaries.push_back(v);
      }
    } else {
      p.intermediaries = ResolveNodes(graph, a.intermediaries);
    }
    const fga::ExhaustiveResult r = fga::SolveExhaustive(p, cfg);
    j["budget"] = a.budget;
    j["threshold"] = a.threshold;
    j["feasible"] = r.feasible;
    j["objective"] = r.objective;
    j["move_sets_evaluated"] = r.move_sets_evaluated;
    j["moves"] = MovesJson(graph, r.best.moves);
    j["goodness_before"] = base.goodness[t];
    j["goodness_after"] = r.objective;
  } else {
    fga::AttackResult res;
    if (a.mode == "direct") {
      res = fga::DirectAttack(graph, attackers, t, cfg);
    } else if (a.mode == "indirect") {
      res = fga::IndirectAttackGreedy(graph, attackers, t, cfg);
    } else if (a.mode == "indirect-scaled") {
      res = fga::IndirectAttackScaled(graph, attackers, t,
                                      {a.scale, a.max_edges}, cfg);
    } else if (a.mode == "mixed") {
      fga::MixedResult m = fga::MixedAttack(graph, attackers, t, a.k1, a.k2, cfg);
      j["delta_direct"] = m.delta_direct;
      j["delta_indirect"] = m.delta_indirect;
      res = std::move(m.result);
    } else {
      throw std::invalid_argument("unknown attack mode '" + a.mode + "'");
    }
    j["moves"] = MovesJson(res.graph, res.outcome.moves);
    j["goodness_before"] = res.outcome.before.goodness[t];
    j["goodness_after"] = res.outcome.after.goodness[t];
    j["delta"] = res.outcome.delta_goodness.at(0);
    j["exhausted"] = res.outcome.exhausted;
    if (res.outcome.moves.size() > attackers.size()) {
      std::cerr << "invariant violated: more moves than attackers\n";
      return kExitInvariant;
    }
  }
  Globals out = g;
  std::string file = "attack.json";
  if (!a.out.empty()) {
    const std::filesystem::path p(a.out);
    if (p.has_parent_path()) {
      out.out_dir = (g.out_dir.empty() ? p.parent_path()
                                       : std::filesystem::path(g.out_dir) /
                                             p.parent_path())
                        .string();
    } else if (out.out_dir.empty()) {
      out.out_dir = ".";
    }
    file = p.filename().string();
  }
  Emit(out, file, Dump(j));
  return kExitOk;
}

// ---- bounds --------------------------------------------------------------

struct BoundsArgs {
  GraphSource src;
  std::string scenario = "direct-sybil";
  std::size_t k = 3;
  std::size_t nodes = 30;
  std::size_t trials = 100;
};

int RunBounds(const Globals& g, const BoundsArgs& a) {
  std::vector<fga::BoundReport> reports;
  bool ok = true;
  if (a.scenario == "flip") {
    fga::Wsn graph = HasSource(a.src) ? LoadGraph(a.src, g)
                                      : fga::GenerateRandom(60, 300, 0.8, g.seed);
    fga::FlipOptions opts;
    opts.trials = a.trials;
    opts.seed = g.seed;
    opts.threads = g.threads;
    const auto flips = fga::VerifyDirectFlip(graph, opts);
    std::ostringstream os;
    os << "trial,target,budget,attackers,goodness_before,goodness_after,"
          "min_attacker_fairness,resampled,flipped\n";
    json rows = json::array();
    for (const auto& f : flips) {
      ok = ok && f.flipped;
      char buf[160];
      std::snprintf(buf, sizeof buf, "%zu,%s,%zu,%zu,%.12g,%.12g,%.12g,%zu,%s\n",
                    f.trial, graph.Label(f.target).c_str(), f.budget,
                    f.attackers, f.goodness_before, f.goodness_after,
                    f.min_attacker_fairness, f.resampled,
                    f.flipped ? "true" : "false");
      os << buf;
      rows.push_back({{"trial", f.trial},
                      {"target", graph.Label(f.target)},
                      {"budget", f.budget},
                      {"attackers", f.attackers},
                      {"goodness_before", f.goodness_before},
                      {"goodness_after", f.goodness_after},
                      {"min_attacker_fairness", f.min_attacker_fairness},
                      {"resampled", f.resampled},
                      {"flipped", f.flipped}});
    }
    if (g.format == "json") {
      Emit(g, "bounds_flip.json", Dump(rows));
    } else {
      Emit(g, "bounds_flip.csv", os.str());
    }
    return ok ? kExitOk : kExitInvariant;
  }

  const fga::BoundScenario scenario = fga::ParseBoundScenario(a.scenario);
  if (scenario == fga::BoundScenario::kStabiliser) {
    const std::vector<std::size_t> ks{1, 2, 3, 4, 5};
    const std::vector<std::size_t> ls{0, 5, 50, 200};
    const std::vector<double> ds{0.1, 0.5, 1.0};
    reports = fga::VerifyStabiliserBound(ks, ls, ds);
  } else {
    fga::Wsn graph;
    if (HasSource(a.src)) {
      graph = LoadGraph(a.src, g);
    } else if (scenario == fga::BoundScenario::kIndirectSybil) {
      graph = fga::GenerateMinKNeighbour(a.nodes, a.k, g.seed);
    } else {
      graph = fga::GenerateRandom(100, 500, 0.8, g.seed);
    }
    fga::BoundTrialOptions opts;
    opts.trials = a.trials;
    opts.seed = g.seed;
    opts.k = a.k;
    opts.threads = g.threads;
    reports = fga::VerifyBoundEmpirically(graph, scenario, opts);
  }
  for (const auto& r : reports) ok = ok && r.satisfied;
  const std::string stem = "bounds_" + a.scenario;
  if (g.format == "json") {
    json rows = json::array();
    for (const auto& r : reports) {
      rows.push_back({{"scenario", fga::BoundScenarioName(r.scenario)},
                      {"trial", r.trial},
                      {"target", r.target == fga::kNoNode
                                     ? json(nullptr)
                                     : json(r.target)},
                      {"intermediary", r.intermediary == fga::kNoNode
                                           ? json(nullptr)
                                           : json(r.intermediary)},
                      {"k", r.k},
                      {"l", r.l},
                      {"weight", r.weight},
                      {"bound_value", r.bound_value},
                      {"observed_delta", r.observed_delta},
                      {"satisfied", r.satisfied}});
    }
    Emit(g, stem + ".json", Dump(rows));
  } else {
    std::ostringstream os;
    fga::WriteBoundReportsCsv(os, reports);
    Emit(g, stem + ".csv", os.str());
  }
  return ok ? kExitOk : kExitInvariant;
}

// ---- campaign ------------------------------------------------------------

struct CampaignArgs {
  GraphSource src;
  std::string mode = "direct";
  std::string ks = "1-7";
  std::optional<std::size_t> samples;
  std::size_t mixed_max = 6;
  std::string attacker_class = "established";
  std::optional<std::size_t> max_indeg;
  std::optional<double> min_goodness;
  std::optional<std::size_t> edges;
  std::size_t scale = 5;
  std::size_t max_edges = 10;
  bool cold = false;
};

int RunCampaignCmd(const Globals& g, const CampaignArgs& a) {
  std::string name;
  const fga::Wsn graph = LoadGraph(a.src, g, &name);
  fga::ExperimentConfig cfg =
      fga::DefaultExperiment(name, fga::ParseCampaignMode(a.mode));
  cfg.ks = ParseRange(a.ks);
  if (a.samples) cfg.samples = *a.samples;
  cfg.mixed_max = a.mixed_max;
  cfg.selection.attacker_class = fga::ParseAttackerClass(a.attacker_class);
  if (a.max_indeg) cfg.weak_target.max_indeg = *a.max_indeg;
  if (a.min_goodness) cfg.weak_target.min_goodness = *a.min_goodness;
  if (a.edges) cfg.weak_target.edges = *a.edges;
  cfg.scaled = {a.scale, a.max_edges};
  cfg.seed = g.seed;
  cfg.cold = a.cold;
  cfg.threads = g.threads;

  const fga::CampaignResult r = fga::RunCampaign(graph, cfg);
  const std::string stem = "campaign_" + a.mode;
  if (g.format == "json") {
    Emit(g, stem + ".json", Dump(fga::CampaignToJson(r)));
  } else {
    std::ostringstream summary;
    std::ostringstream records;
    fga::WriteCampaignSummaryCsv(summary, r);
    fga::WriteCampaignRecordsCsv(records, r);
    if (g.out_dir.empty()) {
      std::cout << summary.str() << '\n' << records.str();
    } else {
      Emit(g, stem + "_summary.csv", summary.str());
      Emit(g, stem + "_records.csv", records.str());
    }
  }
  if (r.HasErrors()) {
    for (const auto& c : r.cells) {
      if (!c.error.empty()) std::cerr << "cell k=" << c.k << ": " << c.error << '\n';
    }
    return kExitData;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fairness/goodness scores, attacks, bounds and campaigns"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char* env = std::getenv("FGA_DATA_DIR")) g.data_dir = env;
  app.add_option("--seed", g.seed, "master random seed");
  app.add_option("--data-dir", g.data_dir,
                 "dataset directory (default $FGA_DATA_DIR)");
  app.add_option("--out-dir", g.out_dir, "write outputs here instead of stdout");
  app.add_option("--format", g.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads, "workers, 0 = all cores");

  ComputeArgs compute;
  auto* c_compute = app.add_subcommand("compute", "fairness and goodness of every node");
  AddGraphOptions(c_compute, compute.src);
  c_compute->add_option("--max-iterations", compute.max_iterations)
      ->check(CLI::PositiveNumber);
  c_compute->add_option("--tolerance", compute.tolerance)
      ->check(CLI::PositiveNumber);

  PredictArgs predict;
  auto* c_predict = app.add_subcommand("predict", "predicted weight f(u) g(v)");
  AddGraphOptions(c_predict, predict.src);
  c_predict->add_option("--pair", predict.pairs, "source and target labels")
      ->expected(2)
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  GraphSource stats_src;
  auto* c_stats = app.add_subcommand("stats", "network statistics");
  AddGraphOptions(c_stats, stats_src);

  std::size_t draws = 1000;
  auto* c_axioms = app.add_subcommand("axioms", "run the axiom suite");
  c_axioms->add_option("--draws", draws, "random cases per axiom")
      ->check(CLI::PositiveNumber);

  AttackArgs attack;
  auto* c_attack = app.add_subcommand("attack", "attack one target");
  AddGraphOptions(c_attack, attack.src);
  c_attack->add_option("--mode", attack.mode)
      ->check(CLI::IsMember(
          {"direct", "indirect", "indirect-scaled", "mixed", "exhaustive"}));
  c_attack->add_option("--target", attack.target, "target label");
  c_attack->add_option("--attackers", attack.attackers, "attacker labels")
      ->delimiter(',');
  c_attack->add_option("--k", attack.k, "attackers to select");
  c_attack->add_option("--k1", attack.k1, "direct attackers (mixed)");
  c_attack->add_option("--k2", attack.k2, "indirect attackers (mixed)");
  c_attack->add_option("--scale", attack.scale)->check(CLI::PositiveNumber);
  c_attack->add_option("--max-edges", attack.max_edges)
      ->check(CLI::PositiveNumber);
  c_attack->add_option("--attacker-class", attack.attacker_class)
      ->check(CLI::IsMember({"established", "fresh", "not-established"}));
  c_attack->add_flag("--cold", attack.cold, "recompute from scratch");
  c_attack->add_option("--out", attack.out, "result file name");
  c_attack->add_option("--budget", attack.budget, "move budget (exhaustive)");
  c_attack->add_option("--threshold", attack.threshold,
                       "goodness threshold (exhaustive)")
      ->check(CLI::Range(-1.0, 1.0));
  c_attack->add_option("--intermediaries", attack.intermediaries,
                       "rateable labels (exhaustive)")
      ->delimiter(',');

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "check attack bounds empirically");
  AddGraphOptions(c_bounds, bounds.src);
  c_bounds->add_option("--scenario", bounds.scenario)
      ->check(CLI::IsMember(
          {"direct-sybil", "indirect-sybil", "stabiliser", "flip"}));
  c_bounds->add_option("--k", bounds.k, "network degree")
      ->check(CLI::PositiveNumber);
  c_bounds->add_option("--nodes", bounds.nodes,
                       "generated min-k-neighbour network size");
  c_bounds->add_option("--trials", bounds.trials)->check(CLI::PositiveNumber);

  CampaignArgs campaign;
  auto* c_campaign = app.add_subcommand("campaign", "run an attack campaign");
  AddGraphOptions(c_campaign, campaign.src);
  c_campaign->add_option("--mode", campaign.mode)
      ->check(CLI::IsMember({"direct", "indirect", "indirect-scaled", "mixed"}));
  c_campaign->add_option("--ks", campaign.ks, "attacker-set sizes, e.g. 1-7");
  c_campaign->add_option("--samples", campaign.samples, "samples per cell");
  c_campaign->add_option("--mixed-max", campaign.mixed_max,
                         "mixed grid k1, k2 in 1..N");
  c_campaign->add_option("--attacker-class", campaign.attacker_class)
      ->check(CLI::IsMember({"established", "fresh", "not-established"}));
  c_campaign->add_option("--max-indeg", campaign.max_indeg,
                         "weak-target indegree cap (indirect-scaled)");
  c_campaign->add_option("--min-goodness", campaign.min_goodness,
                         "weak-target goodness floor (indirect-scaled)");
  c_campaign->add_option("--edges", campaign.edges,
                         "fresh attackers (indirect-scaled)");
  c_campaign->add_option("--scale", campaign.scale)->check(CLI::PositiveNumber);
  c_campaign->add_option("--max-edges", campaign.max_edges)
      ->check(CLI::PositiveNumber);
  c_campaign->add_flag("--cold", campaign.cold, "recompute from scratch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*c_compute) return RunCompute(g, compute);
    if (*c_predict) return RunPredict(g, predict);
    if (*c_stats) return RunStats(g, stats_src);
    if (*c_axioms) return RunAxioms(g, draws);
    if (*c_attack) return RunAttack(g, attack);
    if (*c_bounds) return RunBounds(g, bounds);
    if (*c_campaign) return RunCampaignCmd(g, campaign);
  } catch (const MissingData& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const fga::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const fga::SelectionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitConfig;
}
