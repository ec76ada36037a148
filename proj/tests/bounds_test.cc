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

#include <gtest/gtest.h>

#include <sstream>

#include "fga/engine.h"
#include "fga/generators.h"

namespace fga {
namespace {

bool HasReason(const MinKNeighbourCert& c, MinKViolation::Reason r) {
  for (const MinKViolation& v : c.violations) {
    if (v.reason == r) return true;
  }
  return false;
}

TEST(MinKCertificate, CompleteFourNodeGraph) {
  const Wsn g = GenerateCompletePositive(4);
  const MinKNeighbourCert three = CheckMinKNeighbour(g, 3);
  EXPECT_TRUE(three.holds);
  EXPECT_TRUE(three.violations.empty());

  const MinKNeighbourCert four = CheckMinKNeighbour(g, 4);
  EXPECT_FALSE(four.holds);
  EXPECT_TRUE(HasReason(four, MinKViolation::Reason::kInDegree));
  EXPECT_TRUE(HasReason(four, MinKViolation::Reason::kOutDegree));
  EXPECT_FALSE(HasReason(four, MinKViolation::Reason::kWeightMass));

  const MinKNeighbourCert two = CheckMinKNeighbour(g, 2);
  EXPECT_FALSE(two.holds);
  EXPECT_EQ(two.violations.size(), 4u);
  EXPECT_TRUE(HasReason(two, MinKViolation::Reason::kWeightMass));
  EXPECT_EQ(ReasonName(MinKViolation::Reason::kWeightMass), "weight-mass");

  EXPECT_THROW(CheckMinKNeighbour(g, 0), BoundError);
}

TEST(IndirectBound, Values) {
  EXPECT_NEAR(IndirectSybilBound(3, 3), 2.0 / 12.0, 1e-15);
  EXPECT_NEAR(IndirectSybilBound(9, 5), 0.04, 1e-15);
  double prev = IndirectSybilBound(1, 1);
  for (std::size_t d = 2; d < 50; ++d) {
    EXPECT_LT(IndirectSybilBound(d, 1), prev);
    EXPECT_LT(IndirectSybilBound(1, d), IndirectSybilBound(1, d - 1));
    prev = IndirectSybilBound(d, 1);
  }
  const Wsn ok = GenerateMinKNeighbour(20, 3, 1);
  EXPECT_NEAR(IndirectSybilBound(ok, 0, 3), 2.0 / 12.0, 1e-15);
  EXPECT_THROW(IndirectSybilBound(GenerateCompletePositive(4), 0, 2),
               BoundError);
}

TEST(DirectBound, Values) {
  EXPECT_DOUBLE_EQ(DirectSybilBound(10), 0.2);
  EXPECT_DOUBLE_EQ(DirectSybilBound(1), 2.0);
  EXPECT_DOUBLE_EQ(DirectSybilBound(4), 0.5);
  EXPECT_THROW(DirectSybilBound(0), BoundError);
  EXPECT_THROW(DirectSybilBound(Wsn(2), 1), BoundError);
}

TEST(FlipBudget, Values) {
  EXPECT_EQ(DirectFlipBudget(1.0, 2), 4u);
  EXPECT_EQ(DirectFlipBudget(0.5, 3), 3u);
  EXPECT_EQ(DirectFlipBudget(1e-12, 1), 1u);
  EXPECT_EQ(DirectFlipBudget(0.3, 5), 3u);
  EXPECT_THROW(DirectFlipBudget(0.0, 3), BoundError);
  EXPECT_THROW(DirectFlipBudget(-0.5, 3), BoundError);
}

TEST(StabiliserBound, Values) {
  EXPECT_DOUBLE_EQ(StabiliserLowerBound(2, 0, 1.0), -1.0);
  EXPECT_NEAR(StabiliserLowerBound(1, 9, 0.5), 0.9, 1e-15);
  EXPECT_DOUBLE_EQ(StabiliserLowerBound(3, 4, 0.0), 1.0);
  EXPECT_THROW(StabiliserLowerBound(0, 0, 0.5), BoundError);
  EXPECT_THROW(StabiliserLowerBound(1, 1, 1.5), BoundError);
}

TEST(Bounds, IndirectIsKTimesWeakerAtEqualDegrees) {
  for (std::size_t k = 1; k <= 10; ++k) {
    for (std::size_t ti = 1; ti <= 20; ++ti) {
      for (std::size_t ii = 0; ii <= 20; ++ii) {
        if (ii + 1 < ti) continue;
        EXPECT_LE(IndirectSybilBound(ii, k),
                  DirectSybilBound(ti) / static_cast<double>(k) + 1e-15);
      }
    }
  }
}

TEST(Bounds, ScenarioNames) {
  EXPECT_EQ(ParseBoundScenario("direct-sybil"), BoundScenario::kDirectSybil);
  EXPECT_EQ(ParseBoundScenario("stabilizer"), BoundScenario::kStabiliser);
  EXPECT_EQ(BoundScenarioName(BoundScenario::kIndirectSybil), "indirect-sybil");
  EXPECT_THROW(ParseBoundScenario("sideways"), std::invalid_argument);
}

TEST(EmpiricalBounds, DirectSybilHolds) {
  const Wsn g = GenerateRandom(60, 300, 0.7, 4);
  const auto reports =
      VerifyBoundEmpirically(g, BoundScenario::kDirectSybil, {.trials = 20});
  EXPECT_EQ(reports.size(), 80u);
  for (const BoundReport& r : reports) {
    EXPECT_TRUE(r.satisfied) << r.trial;
    EXPECT_GE(g.InDegree(r.target), 1u);
    EXPECT_NEAR(r.bound_value, 2.0 / g.InDegree(r.target), 1e-15);
  }
}

TEST(EmpiricalBounds, IndirectSybilHolds) {
  for (std::size_t k : {3u, 5u}) {
    const Wsn g = GenerateMinKNeighbour(40, k, k);
    const auto reports = VerifyBoundEmpirically(
        g, BoundScenario::kIndirectSybil, {.trials = 10, .k = k});
    ASSERT_FALSE(reports.empty());
    for (const BoundReport& r : reports) {
      EXPECT_TRUE(r.satisfied);
      EXPECT_NE(r.target, r.intermediary);
      EXPECT_EQ(r.k, k);
    }
  }
  EXPECT_THROW(VerifyBoundEmpirically(GenerateRandom(20, 40, 0.5, 1),
                                      BoundScenario::kIndirectSybil, {}),
               BoundError);
}

TEST(EmpiricalBounds, StabiliserGrid) {
  const std::size_t ks[] = {1, 3};
  const std::size_t ls[] = {0, 4, 9};
  const double deltas[] = {0.0, 0.5, 1.0};
  const auto reports = VerifyStabiliserBound(ks, ls, deltas);
  EXPECT_EQ(reports.size(), 18u);
  for (const BoundReport& r : reports) {
    EXPECT_TRUE(r.satisfied) << r.k << " " << r.l << " " << r.weight;
    EXPECT_LE(r.weight, 1.0);
  }
  const BoundReport none = MeasureStabiliser(2, 3, 0.0);
  EXPECT_NEAR(none.observed_delta, 0.0, 1e-9);
}

TEST(EmpiricalBounds, FlipSucceedsAboveBudget) {
  const Wsn g = GenerateRandom(60, 300, 0.8, 9);
  const auto reports = VerifyDirectFlip(g, {.trials = 15, .seed = 3});
  ASSERT_EQ(reports.size(), 15u);
  for (const FlipReport& r : reports) {
    EXPECT_GT(r.attackers, r.budget);
    EXPECT_GT(r.goodness_before, 0.0);
    EXPECT_GE(r.min_attacker_fairness, 0.5);
    EXPECT_TRUE(r.flipped);
    EXPECT_LT(r.goodness_after, 0.0);
  }
}

TEST(EmpiricalBounds, CsvHeader) {
  std::ostringstream os;
  WriteBoundReportsCsv(os, {});
  EXPECT_EQ(os.str(),
            "scenario,trial,target,intermediary,k,l,weight,bound_value,"
            "observed_delta,satisfied\n");
}

}  // namespace
}  // namespace fga
