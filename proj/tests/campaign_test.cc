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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fga/generators.h"

namespace fga {
namespace {

const Wsn& TestGraph() {
  static const Wsn g = GenerateRandom(150, 900, 0.9, 21);
  return g;
}

ExperimentConfig Small(CampaignMode mode) {
  ExperimentConfig cfg;
  cfg.mode = mode;
  cfg.ks = {1, 3};
  cfg.samples = 4;
  cfg.seed = 77;
  return cfg;
}

TEST(Summarize, KnownValues) {
  const SummaryStats s = Summarize({4.0, 1.0, 3.0, 2.0});
  EXPECT_EQ(s.n, 4u);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.sd, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_DOUBLE_EQ(s.min, 1.0);
  EXPECT_DOUBLE_EQ(s.max, 4.0);
  EXPECT_DOUBLE_EQ(s.median, 2.5);
  EXPECT_DOUBLE_EQ(s.q75, 3.25);
  ASSERT_TRUE(s.ci_half_width.has_value());
  EXPECT_NEAR(*s.ci_half_width, 1.96 * std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
}

TEST(Summarize, SingleValueHasNoInterval) {
  const SummaryStats s = Summarize({0.3});
  EXPECT_EQ(s.n, 1u);
  EXPECT_DOUBLE_EQ(s.median, 0.3);
  EXPECT_FALSE(s.ci_half_width.has_value());
  EXPECT_EQ(Summarize({}).n, 0u);
}

TEST(CampaignConfig, ModesAndDefaults) {
  EXPECT_EQ(ParseCampaignMode("indirect-scaled"), CampaignMode::kIndirectScaled);
  EXPECT_EQ(CampaignModeName(CampaignMode::kMixed), "mixed");
  EXPECT_THROW(ParseCampaignMode("exhaustive"), std::invalid_argument);
  EXPECT_EQ(DefaultSampleCount("bitcoin-otc", CampaignMode::kDirect), 21u);
  EXPECT_EQ(DefaultSampleCount("bitcoin-alpha", CampaignMode::kMixed), 12u);
  EXPECT_EQ(DefaultSampleCount("rfa", CampaignMode::kIndirectScaled), 27u);
  EXPECT_EQ(DefaultSampleCount("other", CampaignMode::kDirect), 20u);
  EXPECT_EQ(WeakTargetDefaults("bitcoin-alpha")->max_indeg, 13u);
  EXPECT_FALSE(WeakTargetDefaults("other").has_value());
  ExperimentConfig bad;
  bad.samples = 0;
  EXPECT_THROW(bad.Validate(), std::invalid_argument);
  bad = ExperimentConfig{};
  bad.ks.clear();
  EXPECT_THROW(bad.Validate(), std::invalid_argument);
}

TEST(Campaign, ZeroAttackersChangeNothing) {
  ExperimentConfig cfg = Small(CampaignMode::kDirect);
  cfg.ks = {0};
  const CampaignResult r = RunCampaign(TestGraph(), cfg);
  ASSERT_EQ(r.cells.size(), 1u);
  for (const SampleRecord& rec : r.records) {
    EXPECT_TRUE(rec.error.empty());
    EXPECT_EQ(rec.delta, 0.0);
  }
}

TEST(Campaign, SummariesRecomputeFromRecords) {
  for (CampaignMode mode : {CampaignMode::kDirect, CampaignMode::kIndirect}) {
    const CampaignResult r = RunCampaign(TestGraph(), Small(mode));
    ASSERT_FALSE(r.HasErrors());
    ASSERT_EQ(r.cells.size(), 2u);
    ASSERT_EQ(r.records.size(), 8u);
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
      std::vector<double> abs;
      for (const SampleRecord& rec : r.records) {
        if (rec.cell != c) continue;
        EXPECT_EQ(rec.attackers.size(), r.cells[c].k);
        EXPECT_NEAR(rec.delta, rec.goodness_after - rec.goodness_before,
                    1e-15);
        abs.push_back(std::abs(rec.delta));
      }
      const SummaryStats s = Summarize(abs);
      EXPECT_EQ(s.n, r.cells[c].total.n);
      EXPECT_DOUBLE_EQ(s.mean, r.cells[c].total.mean);
      EXPECT_DOUBLE_EQ(s.q75, r.cells[c].total.q75);
    }
  }
}

TEST(Campaign, DeterministicAcrossThreadCounts) {
  ExperimentConfig cfg = Small(CampaignMode::kIndirect);
  cfg.threads = 1;
  std::ostringstream serial;
  WriteCampaignRecordsCsv(serial, RunCampaign(TestGraph(), cfg));
  cfg.threads = 4;
  std::ostringstream parallel;
  WriteCampaignRecordsCsv(parallel, RunCampaign(TestGraph(), cfg));
  EXPECT_EQ(serial.str(), parallel.str());
  cfg.seed = 78;
  std::ostringstream other;
  WriteCampaignRecordsCsv(other, RunCampaign(TestGraph(), cfg));
  EXPECT_NE(serial.str(), other.str());
}

TEST(Campaign, MixedGrid) {
  ExperimentConfig cfg = Small(CampaignMode::kMixed);
  cfg.samples = 1;
  cfg.threads = 0;
  const CampaignResult r = RunCampaign(TestGraph(), cfg);
  ASSERT_EQ(r.cells.size(), 36u);
  EXPECT_EQ(r.cells.front().k1, 1u);
  EXPECT_EQ(r.cells.back().k2, 6u);
  for (const SampleRecord& rec : r.records) {
    EXPECT_NEAR(rec.delta_direct + rec.delta_indirect, rec.delta, 1e-15);
  }
  for (const CellSummary& c : r.cells) {
    EXPECT_FALSE(c.total.ci_half_width.has_value());
  }
  std::ostringstream os;
  WriteCampaignSummaryCsv(os, r);
  EXPECT_NE(os.str().find(",NA,"), std::string::npos);
  EXPECT_NE(os.str().find("mean_direct"), std::string::npos);
}

TEST(Campaign, ScaledUsesFreshSybils) {
  ExperimentConfig cfg;
  cfg.mode = CampaignMode::kIndirectScaled;
  cfg.samples = 3;
  cfg.weak_target = {.max_indeg = 10, .min_goodness = 0.5, .samples = 3,
                     .edges = 6};
  const CampaignResult r = RunCampaign(TestGraph(), cfg);
  ASSERT_EQ(r.cells.size(), 1u);
  for (const SampleRecord& rec : r.records) {
    EXPECT_TRUE(rec.error.empty()) << rec.error;
    EXPECT_EQ(rec.attackers.size(), 6u);
    for (NodeId a : rec.attackers) EXPECT_GE(a, TestGraph().node_count());
  }
}

TEST(Campaign, InsufficientCandidatesAreReported) {
  ExperimentConfig cfg = Small(CampaignMode::kDirect);
  cfg.ks = {500};
  const CampaignResult r = RunCampaign(TestGraph(), cfg);
  EXPECT_TRUE(r.HasErrors());
  EXPECT_FALSE(r.cells[0].error.empty());
}

TEST(Campaign, JsonShape) {
  const CampaignResult r = RunCampaign(TestGraph(), Small(CampaignMode::kDirect));
  const nlohmann::json j = CampaignToJson(r);
  EXPECT_EQ(j["cells"].size(), 2u);
  EXPECT_EQ(j["records"].size(), 8u);
}

}  // namespace
}  // namespace fga
