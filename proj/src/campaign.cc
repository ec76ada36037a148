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

#include "fga/campaign.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "fga/engine.h"
#include "fga/parallel.h"
#include "fga/random.h"

namespace fga {
namespace {

struct DatasetDefaults {
  std::string_view name;
  WeakTargetParams weak;
  std::size_t per_k_samples;
  std::size_t mixed_samples;
};

// Weak-target search parameters and the smallest sample counts used per
// attacker-set size and per mixed-grid cell.
constexpr DatasetDefaults kDefaults[] = {
    {"bitcoin-otc", {10, 0.8, 20, 20}, 21, 26},
    {"bitcoin-alpha", {13, 0.5, 30, 20}, 24, 12},
    {"rfa", {10, 0.5, 27, 20}, 25, 17},
};

const DatasetDefaults* FindDefaults(std::string_view dataset) {
  for (const DatasetDefaults& d : kDefaults) {
    if (d.name == dataset) return &d;
  }
  return nullptr;
}

struct Cell {
  std::size_t k = 0;
  std::size_t k1 = 0;
  std::size_t k2 = 0;
};

std::vector<Cell> MakeCells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  switch (cfg.mode) {
    case CampaignMode::kDirect:
    case CampaignMode::kIndirect:
      for (std::size_t k : cfg.ks) cells.push_back({k, 0, 0});
      break;
    case CampaignMode::kIndirectScaled:
      cells.push_back({cfg.weak_target.edges, 0, 0});
      break;
    case CampaignMode::kMixed:
      for (std::size_t k1 = 1; k1 <= cfg.mixed_max; ++k1) {
        for (std::size_t k2 = 1; k2 <= cfg.mixed_max; ++k2) {
          cells.push_back({k1 + k2, k1, k2});
        }
      }
      break;
  }
  return cells;
}

SelectionCriteria WeakTargetCriteria(const ExperimentConfig& cfg) {
  SelectionCriteria c = cfg.selection;
  c.target_min_indeg = 1;
  c.target_max_indeg_exclusive = cfg.weak_target.max_indeg + 1;
  c.target_min_goodness = cfg.weak_target.min_goodness;
  return c;
}

double Quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string CsvField(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char ch : v) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::json StatsJson(const SummaryStats& s) {
  nlohmann::json j = {{"n", s.n},         {"mean", s.mean}, {"sd", s.sd},
                      {"min", s.min},     {"max", s.max},   {"median", s.median},
                      {"q75", s.q75},     {"ci_half_width", nullptr}};
  if (s.ci_half_width) j["ci_half_width"] = *s.ci_half_width;
  return j;
}

void StatsCsv(std::ostream& os, const SummaryStats& s) {
  os << s.n << ',' << Num(s.mean) << ',' << Num(s.sd) << ',' << Num(s.min)
     << ',' << Num(s.max) << ',' << Num(s.median) << ',' << Num(s.q75) << ','
     << (s.ci_half_width ? Num(*s.ci_half_width) : "NA");
}

}  // namespace

CampaignMode ParseCampaignMode(std::string_view name) {
  if (name == "direct") return CampaignMode::kDirect;
  if (name == "indirect") return CampaignMode::kIndirect;
  if (name == "indirect-scaled") return CampaignMode::kIndirectScaled;
  if (name == "mixed") return CampaignMode::kMixed;
  throw std::invalid_argument("unknown campaign mode '" + std::string(name) +
                              "'");
}

std::string_view CampaignModeName(CampaignMode m) {
  switch (m) {
    case CampaignMode::kDirect:
      return "direct";
    case CampaignMode::kIndirect:
      return "indirect";
    case CampaignMode::kIndirectScaled:
      return "indirect-scaled";
    case CampaignMode::kMixed:
      return "mixed";
  }
  return "?";
}

std::optional<WeakTargetParams> WeakTargetDefaults(std::string_view dataset) {
  if (const DatasetDefaults* d = FindDefaults(dataset)) return d->weak;
  return std::nullopt;
}

std::size_t DefaultSampleCount(std::string_view dataset, CampaignMode mode) {
  const DatasetDefaults* d = FindDefaults(dataset);
  if (d == nullptr) return 20;
  switch (mode) {
    case CampaignMode::kDirect:
    case CampaignMode::kIndirect:
      return d->per_k_samples;
    case CampaignMode::kMixed:
      return d->mixed_samples;
    case CampaignMode::kIndirectScaled:
      return d->weak.samples;
  }
  return 20;
}

void ExperimentConfig::Validate() const {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  if ((mode == CampaignMode::kDirect || mode == CampaignMode::kIndirect) &&
      ks.empty()) {
    throw std::invalid_argument("campaign needs at least one k");
  }
  if (mode == CampaignMode::kMixed && mixed_max == 0) {
    throw std::invalid_argument("mixed grid size must be >= 1");
  }
  if (mode == CampaignMode::kIndirectScaled) {
    if (weak_target.edges == 0) {
      throw std::invalid_argument("scaled campaign needs edges >= 1");
    }
    if (scaled.scale == 0 || scaled.max_edges == 0) {
      throw std::invalid_argument("scale and max edges must be >= 1");
    }
  }
}

ExperimentConfig DefaultExperiment(std::string_view dataset,
                                   CampaignMode mode) {
  ExperimentConfig cfg;
  cfg.dataset = std::string(dataset);
  cfg.mode = mode;
  cfg.samples = DefaultSampleCount(dataset, mode);
  if (auto weak = WeakTargetDefaults(dataset)) cfg.weak_target = *weak;
  return cfg;
}

SummaryStats Summarize(std::vector<double> values) {
  SummaryStats s;
  s.n = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / (n - 1.0));
    s.ci_half_width = 1.96 * s.sd / std::sqrt(n);
  }
  s.min = values.front();
  s.max = values.back();
  s.median = Quantile(values, 0.5);
  s.q75 = Quantile(values, 0.75);
  return s;
}

bool CampaignResult::HasErrors() const {
  return std::any_of(cells.begin(), cells.end(),
                     [](const CellSummary& c) { return !c.error.empty(); });
}

CampaignResult RunCampaign(const Wsn& g, const ExperimentConfig& cfg) {
  cfg.Validate();
  CampaignResult result;
  result.config = cfg;
  const std::vector<Cell> cells = MakeCells(cfg);
  const FgaScores base = ComputeFga(g);
  const bool scaled = cfg.mode == CampaignMode::kIndirectScaled;
  const SelectionCriteria criteria =
      scaled ? WeakTargetCriteria(cfg) : cfg.selection;

  const std::size_t targets = QualifyingTargets(g, base, criteria).size();
  const std::size_t attackers =
      scaled ? 0 : QualifyingAttackers(g, base, criteria).size();
  result.cells.resize(cells.size());
  std::vector<bool> runnable(cells.size(), false);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    CellSummary& cell = result.cells[c];
    cell.k = cells[c].k;
    cell.k1 = cells[c].k1;
    cell.k2 = cells[c].k2;
    if (targets == 0) {
      cell.error = "insufficient targets: none qualify";
    } else if (!scaled && attackers < cells[c].k) {
      cell.error = "insufficient attackers: need " +
                   std::to_string(cells[c].k) + ", " +
                   std::to_string(attackers) + " qualify";
    } else {
      runnable[c] = true;
    }
  }

  AttackConfig acfg;
  acfg.cold = cfg.cold;
  std::vector<SampleRecord> slots(cells.size() * cfg.samples);
  ParallelFor(slots.size(), ResolveThreads(cfg.threads),
              [&](std::size_t idx, unsigned) {
                const std::size_t c = idx / cfg.samples;
                SampleRecord& rec = slots[idx];
                rec.cell = c;
                rec.sample = idx % cfg.samples;
                if (!runnable[c]) return;
                Rng rng(DeriveSeed(cfg.seed, {c, rec.sample}));
                try {
                  const NodeId t = SelectTargets(g, base, criteria, 1, rng)[0];
                  rec.target = t;
                  rec.target_label = g.Label(t);
                  const NodeId exclude[] = {t};
                  AttackResult res;
                  double d_direct = 0.0;
                  double d_indirect = 0.0;
                  switch (cfg.mode) {
                    case CampaignMode::kDirect:
                      rec.attackers = SelectAttackers(g, base, criteria,
                                                      cells[c].k, rng, exclude);
                      res = DirectAttack(g, rec.attackers, t, acfg);
                      break;
                    case CampaignMode::kIndirect:
                      rec.attackers = SelectAttackers(g, base, criteria,
                                                      cells[c].k, rng, exclude);
                      res = IndirectAttackGreedy(g, rec.attackers, t, acfg);
                      break;
                    case CampaignMode::kIndirectScaled: {
                      Wsn work = g;
                      for (std::size_t i = 0; i < cfg.weak_target.edges; ++i) {
                        rec.attackers.push_back(
                            work.AddNode("sybil" + std::to_string(i)));
                      }
                      res = IndirectAttackScaled(work, rec.attackers, t,
                                                 cfg.scaled, acfg);
                      break;
                    }
                    case CampaignMode::kMixed: {
                      rec.attackers = SelectAttackers(g, base, criteria,
                                                      cells[c].k, rng, exclude);
                      MixedResult m = MixedAttack(g, rec.attackers, t,
                                                  cells[c].k1, cells[c].k2,
                                                  acfg);
                      d_direct = m.delta_direct;
                      d_indirect = m.delta_indirect;
                      res = std::move(m.result);
                      break;
                    }
                  }
                  rec.goodness_before = res.outcome.before.goodness[t];
                  rec.goodness_after = res.outcome.after.goodness[t];
                  rec.delta = res.outcome.delta_goodness.at(0);
                  rec.delta_direct = d_direct;
                  rec.delta_indirect = d_indirect;
                  rec.moves = res.outcome.moves.size();
                  rec.exhausted = res.outcome.exhausted;
                } catch (const SelectionError& e) {
                  rec.error = e.what();
                }
              });

  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!runnable[c]) continue;
    std::vector<double> total;
    std::vector<double> direct;
    std::vector<double> indirect;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      const SampleRecord& rec = slots[c * cfg.samples + s];
      if (!rec.error.empty()) {
        if (result.cells[c].error.empty()) result.cells[c].error = rec.error;
        continue;
      }
      total.push_back(std::abs(rec.delta));
      direct.push_back(std::abs(rec.delta_direct));
      indirect.push_back(std::abs(rec.delta_indirect));
    }
    result.cells[c].total = Summarize(std::move(total));
    if (cfg.mode == CampaignMode::kMixed) {
      result.cells[c].direct = Summarize(std::move(direct));
      result.cells[c].indirect = Summarize(std::move(indirect));
    }
  }
  for (SampleRecord& rec : slots) {
    if (runnable[rec.cell]) result.records.push_back(std::move(rec));
  }
  return result;
}

nlohmann::json CampaignToJson(const CampaignResult& r) {
  const ExperimentConfig& c = r.config;
  nlohmann::json config = {
      {"dataset", c.dataset},
      {"mode", CampaignModeName(c.mode)},
      {"seed", c.seed},
      {"samples", c.samples},
      {"cold", c.cold},
  };
  switch (c.mode) {
    case CampaignMode::kIndirectScaled:
      config["weak_target"] = {{"max_indeg", c.weak_target.max_indeg},
                               {"min_goodness", c.weak_target.min_goodness},
                               {"edges", c.weak_target.edges}};
      config["scale"] = c.scaled.scale;
      config["max_edges"] = c.scaled.max_edges;
      break;
    case CampaignMode::kMixed:
      config["mixed_max"] = c.mixed_max;
      config["attacker_class"] = AttackerClassName(c.selection.attacker_class);
      break;
    default:
      config["ks"] = c.ks;
      config["attacker_class"] = AttackerClassName(c.selection.attacker_class);
      break;
  }

  nlohmann::json cells = nlohmann::json::array();
  for (const CellSummary& cell : r.cells) {
    nlohmann::json j = {{"k", cell.k}, {"abs_delta", StatsJson(cell.total)}};
    if (c.mode == CampaignMode::kMixed) {
      j["k1"] = cell.k1;
      j["k2"] = cell.k2;
      j["abs_delta_direct"] = StatsJson(cell.direct);
      j["abs_delta_indirect"] = StatsJson(cell.indirect);
    }
    if (!cell.error.empty()) j["error"] = cell.error;
    cells.push_back(std::move(j));
  }

  nlohmann::json records = nlohmann::json::array();
  for (const SampleRecord& rec : r.records) {
    const CellSummary& cell = r.cells[rec.cell];
    nlohmann::json j = {{"cell", rec.cell}, {"k", cell.k},
                        {"sample", rec.sample}};
    if (c.mode == CampaignMode::kMixed) {
      j["k1"] = cell.k1;
      j["k2"] = cell.k2;
    }
    if (!rec.error.empty()) {
      j["error"] = rec.error;
    } else {
      j["target"] = rec.target_label;
      j["attackers"] = rec.attackers.size();
      j["goodness_before"] = rec.goodness_before;
      j["goodness_after"] = rec.goodness_after;
      j["delta"] = rec.delta;
      if (c.mode == CampaignMode::kMixed) {
        j["delta_direct"] = rec.delta_direct;
        j["delta_indirect"] = rec.delta_indirect;
      }
      j["moves"] = rec.moves;
      j["exhausted"] = rec.exhausted;
    }
    records.push_back(std::move(j));
  }
  return {{"config", config}, {"cells", cells}, {"records", records}};
}

void WriteCampaignSummaryCsv(std::ostream& os, const CampaignResult& r) {
  const bool mixed = r.config.mode == CampaignMode::kMixed;
  os << "seed,mode,k,k1,k2,n,mean,sd,min,max,median,q75,ci_half_width";
  if (mixed) os << ",mean_direct,mean_indirect";
  os << ",error\n";
  for (const CellSummary& cell : r.cells) {
    os << r.config.seed << ',' << CampaignModeName(r.config.mode) << ','
       << cell.k << ',' << cell.k1 << ',' << cell.k2 << ',';
    StatsCsv(os, cell.total);
    if (mixed) {
      os << ',' << Num(cell.direct.mean) << ',' << Num(cell.indirect.mean);
    }
    os << ',' << CsvField(cell.error) << '\n';
  }
}

void WriteCampaignRecordsCsv(std::ostream& os, const CampaignResult& r) {
  os << "seed,cell,k,k1,k2,sample,target,attackers,goodness_before,"
        "goodness_after,delta,delta_direct,delta_indirect,moves,exhausted,"
        "error\n";
  for (const SampleRecord& rec : r.records) {
    const CellSummary& cell = r.cells[rec.cell];
    os << r.config.seed << ',' << rec.cell << ',' << cell.k << ',' << cell.k1
       << ',' << cell.k2 << ',' << rec.sample << ',' << CsvField(rec.target_label) << ','
       << rec.attackers.size() << ',' << Num(rec.goodness_before) << ','
       << Num(rec.goodness_after) << ',' << Num(rec.delta) << ','
       << Num(rec.delta_direct) << ',' << Num(rec.delta_indirect) << ','
       << rec.moves << ',' << (rec.exhausted ? "true" : "false") << ','
       << CsvField(rec.error) << '\n';
  }
}

}  // namespace fga
