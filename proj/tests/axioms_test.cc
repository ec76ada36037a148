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

#include <gtest/gtest.h>

#include "fga/engine.h"
#include "fga/gadgets.h"
#include "fga/random.h"

namespace fga {
namespace {

TEST(PinnedSink, ClosedFormAndInverse) {
  EXPECT_DOUBLE_EQ(PinnedSinkGoodness(8, 1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(PinnedSinkGoodness(8, 0.5, -1.0), 7.0 / 10.0);
  for (double f : {0.2, 0.5, 1.0}) {
    for (double e : {0.0, 0.3, 1.0, 1.5}) {
      const auto w = PinnedSinkWeight(64, f, e);
      ASSERT_TRUE(w.has_value()) << f << " " << e;
      EXPECT_NEAR(PinnedSinkGoodness(64, f, *w) - *w, e, 1e-12);
    }
  }
  EXPECT_FALSE(PinnedSinkWeight(64, 1.0, 1.95).has_value());
}

TEST(PinnedSink, MatchesEngine) {
  Wsn g(1);
  const NodeId sink = AttachPinnedSink(g, 0, -0.4, 10);
  const FgaScores s = ComputeFga(g, GadgetFgaConfig());
  EXPECT_NEAR(s.goodness[sink],
              PinnedSinkGoodness(10, s.fairness[0], -0.4), 1e-12);
}

TEST(Gadgets, FixedFormulas) {
  const RaterGroup a[] = {{1, 0.7, 1.0}};
  EXPECT_NEAR(GoodnessWithFixedFairness(a), 0.7, 1e-15);
  const RaterGroup b[] = {{1, 0.75, -0.8}};
  EXPECT_NEAR(GoodnessWithFixedFairness(b), -0.6, 1e-15);
  const RaterGroup c[] = {{1, 1.0, 1.0}, {1, 1.0, -1.0}};
  EXPECT_NEAR(GoodnessWithFixedFairness(c), 0.0, 1e-15);
  const RaterGroup d[] = {{3, 1.0, 0.8}, {1, 1.0, 0.0}};
  EXPECT_NEAR(GoodnessWithFixedFairness(d), 0.6, 1e-15);

  const double zero[] = {0.0};
  const double two[] = {2.0};
  const double mid[] = {0.0, 2.0};
  const double mixed[] = {0.4, 0.4, 1.0, 1.0, 1.0};
  EXPECT_DOUBLE_EQ(FairnessWithFixedGoodness(zero), 1.0);
  EXPECT_DOUBLE_EQ(FairnessWithFixedGoodness(two), 0.0);
  EXPECT_DOUBLE_EQ(FairnessWithFixedGoodness(mid), 0.5);
  EXPECT_NEAR(FairnessWithFixedGoodness(mixed), 0.62, 1e-15);
}

TEST(Gadgets, GoodnessGadgetRealizesRaterFairness) {
  const RaterGroup groups[] = {{2, 0.6, 1.0}, {1, 0.9, -0.5}, {3, 0.35, 0.2}};
  const GoodnessGadget gadget = BuildGoodnessGadget(groups);
  const GoodnessMeasurement m = Measure(gadget);
  EXPECT_LT(m.fairness_deviation, 1e-9);
  EXPECT_NEAR(m.goodness, GoodnessWithFixedFairness(groups), 1e-9);
}

TEST(Gadgets, FairnessGadgetRealizesErrors) {
  const double errors[] = {0.4, 1.0, 0.0};
  const FairnessGadget gadget = BuildFairnessGadget(errors);
  const FairnessMeasurement m = Measure(gadget);
  EXPECT_LT(m.error_deviation, 1e-9);
  EXPECT_NEAR(m.fairness, FairnessWithFixedGoodness(errors), 1e-9);
}

TEST(Gadgets, FairnessPinDesign) {
  const auto pin = DesignFairnessPin(0.4, 0.0, 0, {});
  ASSERT_TRUE(pin.has_value());
  EXPECT_GE(pin->sinks, 1u);
  EXPECT_FALSE(DesignFairnessPin(1.5, 0.0, 0, {}).has_value());
}

TEST(Axioms, GoodnessExamples) {
  EXPECT_TRUE(CheckSmoothGoodness(0.4, 0.3, 1.0).holds);
  EXPECT_TRUE(CheckSmoothGoodness(0.5, 0.25, -0.8).holds);
  EXPECT_TRUE(CheckIncreaseWeight(1.0, 0.2, 0.5).holds);
  EXPECT_TRUE(CheckIncreaseWeight(0.5, -0.4, 0.4).holds);
  EXPECT_TRUE(CheckGoodnessOrder({1, 1.0, 0.9}, {1, 1.0, 0.1}).holds);
  EXPECT_TRUE(CheckGoodnessOrder({1, 0.8, 1.0}, {1, 0.3, 1.0}).holds);
  EXPECT_TRUE(CheckGoodnessOrder({1, 0.8, -1.0}, {1, 0.3, -1.0}).holds);
  EXPECT_TRUE(CheckMaximalTrust(5).holds);
  EXPECT_TRUE(CheckMaximalTrustAndBaselines().holds);
  const RaterGroup halves[] = {{1, 1.0, 1.0}, {1, 1.0, -1.0}};
  EXPECT_TRUE(CheckGroupsGoodness(halves).holds);
  const RaterGroup weighted[] = {{3, 1.0, 0.8}, {1, 1.0, 0.0}};
  EXPECT_TRUE(CheckGroupsGoodness(weighted).holds);
}

TEST(Axioms, FairnessExamples) {
  EXPECT_TRUE(CheckObviousFairness(3).holds);
  EXPECT_TRUE(CheckSmoothFairness(0.0, 2.0).holds);
  EXPECT_TRUE(CheckSmoothFairness(0.3, 0.9).holds);
  EXPECT_TRUE(CheckMonotonicityFairness(0.4, 2, 1.0, 3).holds);
  const ErrorGroup groups[] = {{2, 0.4}, {3, 1.0}};
  EXPECT_TRUE(CheckGroupsFairness(groups).holds);
}

TEST(Axioms, ChecksUseBothModesWhenRealizable) {
  const AxiomVerdict v = CheckSmoothGoodness(0.4, 0.3, 1.0);
  EXPECT_GT(v.fixed_cases, 0u);
  EXPECT_GT(v.gadget_cases, 0u);
  EXPECT_LT(v.max_abs_error, 1e-9);
}

TEST(Axioms, InvalidParametersThrow) {
  EXPECT_THROW(CheckSmoothGoodness(1.2, 0.1, 0.5), std::invalid_argument);
  EXPECT_THROW(CheckGoodnessOrder({1, 0.5, 0.2}, {2, 0.5, 0.1}),
               std::invalid_argument);
  EXPECT_THROW(CheckGoodnessOrder({1, 0.5, 0.2}, {1, 0.4, 0.1}),
               std::invalid_argument);
}

TEST(Axioms, VerdictMerge) {
  AxiomVerdict a;
  a.fixed_cases = 2;
  a.max_abs_error = 1e-12;
  AxiomVerdict b;
  b.holds = false;
  b.gadget_cases = 1;
  b.max_abs_error = 1e-10;
  b.first_failure = "boom";
  a.Merge(b);
  EXPECT_FALSE(a.holds);
  EXPECT_EQ(a.fixed_cases, 2u);
  EXPECT_EQ(a.gadget_cases, 1u);
  EXPECT_EQ(a.max_abs_error, 1e-10);
  EXPECT_EQ(a.first_failure, "boom");
}

TEST(AxiomSuite, AllElevenHoldAndAreThreadIndependent) {
  AxiomSuiteConfig cfg;
  cfg.draws = 60;
  cfg.seed = 5;
  cfg.threads = 1;
  const auto serial = RunAxiomSuite(cfg);
  cfg.threads = 4;
  const auto parallel = RunAxiomSuite(cfg);
  ASSERT_EQ(serial.size(), 11u);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].number, static_cast<int>(i + 1));
    EXPECT_TRUE(serial[i].verdict.holds)
        << serial[i].name << ": " << serial[i].verdict.first_failure;
    EXPECT_EQ(serial[i].verdict.max_abs_error,
              parallel[i].verdict.max_abs_error);
    EXPECT_EQ(serial[i].verdict.gadget_cases,
              parallel[i].verdict.gadget_cases);
  }
  const nlohmann::json j = AxiomReportsToJson(serial);
  EXPECT_TRUE(j["all_pass"].get<bool>());
  EXPECT_EQ(j["axioms"].size(), 11u);
}

}  // namespace
}  // namespace fga
