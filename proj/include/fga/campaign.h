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

// Attack campaigns: many seeded (target, attacker set) samples per cell,
// per-sample records and per-cell summaries of |delta g(t)|.

#ifndef FGA_CAMPAIGN_H_
#define FGA_CAMPAIGN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fga/attacks.h"
#include "fga/selection.h"
#include "fga/wsn.h"
#include "json.hpp"

namespace fga {

enum class CampaignMode { kDirect, kIndirect, kIndirectScaled, kMixed };
CampaignMode ParseCampaignMode(std::string_view name);
std::string_view CampaignModeName(CampaignMode m);

// Target search parameters for scaled indirect campaigns.
struct WeakTargetParams {
  std::size_t max_indeg = 10;
  double min_goodness = 0.8;
  std::size_t samples = 20;
  // Fresh attackers, i.e. edges the attack may add.
  std::size_t edges = 20;
};

// Known per-dataset defaults; nullopt for other names.
std::optional<WeakTargetParams> WeakTargetDefaults(std::string_view dataset);
// Samples per cell: smallest per-k count used for direct / indirect
// campaigns, the mixed-grid minimum, or the weak-target count. 20 for
// unknown datasets.
std::size_t DefaultSampleCount(std::string_view dataset, CampaignMode mode);

struct ExperimentConfig {
  std::string dataset = "custom";
  CampaignMode mode = CampaignMode::kDirect;
  // Attacker-set sizes for direct and indirect campaigns.
  std::vector<std::size_t> ks = {1, 2, 3, 4, 5, 6, 7};
  // Mixed grid: k1, k2 in 1..mixed_max.
  std::size_t mixed_max = 6;
  std::size_t samples = 20;
  SelectionCriteria selection;
  WeakTargetParams weak_target;
  ScaledParams scaled;
  std::uint64_t seed = 1;
  bool cold = false;
  // Sample-level workers; 0 picks the hardware concurrency.
  unsigned threads = 1;

  // Throws std::invalid_argument.
  void Validate() const;
};

// Fills samples and weak-target parameters from the dataset defaults.
ExperimentConfig DefaultExperiment(std::string_view dataset, CampaignMode mode);

struct SampleRecord {
  std::size_t cell = 0;
  std::size_t sample = 0;
  NodeId target = 0;
  std::string target_label;
  std::vector<NodeId> attackers;
  double goodness_before = 0.0;
  double goodness_after = 0.0;
  // g_after - g_before.
  double delta = 0.0;
  // Mixed only.
  double delta_direct = 0.0;
  double delta_indirect = 0.0;
  std::size_t moves = 0;
  bool exhausted = false;
  // Non-empty when the sample could not be drawn.
  std::string error;
};

struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  // 1.96 sd / sqrt(n); undefined for n < 2.
  std::optional<double> ci_half_width;
};

// Sample standard deviation; quantiles interpolate linearly between order
// statistics.
SummaryStats Summarize(std::vector<double> values);

struct CellSummary {
  std::size_t k = 0;
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  // Over |delta|.
  SummaryStats total;
  // Mixed only: over |delta_direct| and |delta_indirect|.
  SummaryStats direct;
  SummaryStats indirect;
  std::string error;
};

struct CampaignResult {
  ExperimentConfig config;
  std::vector<CellSummary> cells;
  std::vector<SampleRecord> records;

  bool HasErrors() const;
};

CampaignResult RunCampaign(const Wsn& g, const ExperimentConfig& cfg);

nlohmann::json CampaignToJson(const CampaignResult& r);
void WriteCampaignSummaryCsv(std::ostream& os, const CampaignResult& r);
void WriteCampaignRecordsCsv(std::ostream& os, const CampaignResult& r);

}  // namespace fga

#endif  // FGA_CAMPAIGN_H_
