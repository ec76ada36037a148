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

#include "fga/io.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fga/generators.h"

namespace fga {
namespace {

Wsn Read(const std::string& text, double r_max = 10.0) {
  std::istringstream is(text);
  return ReadRatingCsv(is, RatingScale(r_max));
}

DataError::Kind ErrorKind(const std::string& text) {
  try {
    Read(text);
  } catch (const DataError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no DataError for: " << text;
  return DataError::Kind::kIo;
}

TEST(RatingCsv, ParsesSnapLayout) {
  const Wsn g = Read("6,2,4,1289241911\n6,5,2,1289241941\n1,15,1,1289243140\n");
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.Label(0), "6");
  EXPECT_EQ(g.Label(2), "5");
  EXPECT_DOUBLE_EQ(*g.Weight(*g.FindLabel("6"), *g.FindLabel("2")), 0.4);
}

TEST(RatingCsv, SkipsHeaderAndBlankLines) {
  const Wsn g = Read("SOURCE,TARGET,RATING,TIME\n\na,b,-10,1\n");
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(*g.Weight(0, 1), -1.0);
}

TEST(RatingCsv, DuplicatesKeepLatestTimestamp) {
  const Wsn g = Read("a,b,5,20\na,b,-5,10\n");
  EXPECT_DOUBLE_EQ(*g.Weight(0, 1), 0.5);
  const Wsn h = Read("a,b,5,10\na,b,-5,20\n");
  EXPECT_DOUBLE_EQ(*h.Weight(0, 1), -0.5);
  const Wsn untimed = Read("a,b,5\na,b,-5\n");
  EXPECT_DOUBLE_EQ(*untimed.Weight(0, 1), -0.5);
}

TEST(RatingCsv, Errors) {
  EXPECT_EQ(ErrorKind("a,b,11,1\n"), DataError::Kind::kOutOfScale);
  EXPECT_EQ(ErrorKind("a,a,1,1\n"), DataError::Kind::kSelfLoop);
  EXPECT_EQ(ErrorKind("a,b\n"), DataError::Kind::kMalformedRow);
  EXPECT_EQ(ErrorKind("a,b,1,1\nc,d,x,1\n"), DataError::Kind::kMalformedRow);
  try {
    Read("a,b,1\nc,d,99\n");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(LoadRatingCsv("/nonexistent/file.csv", RatingScale(1.0)),
               DataError);
}

TEST(RatingCsv, RoundTrip) {
  const Wsn g = GenerateRandom(40, 200, 0.6, 8);
  std::ostringstream os;
  WriteRatingCsv(os, g);
  const Wsn h = Read(os.str(), 1.0);
  ASSERT_EQ(h.edge_count(), g.edge_count());
  for (const Edge& e : g.Edges()) {
    const auto u = h.FindLabel(g.Label(e.source));
    const auto v = h.FindLabel(g.Label(e.target));
    ASSERT_TRUE(u && v);
    EXPECT_NEAR(*h.Weight(*u, *v), e.weight, 1e-12);
  }
  std::ostringstream again;
  WriteRatingCsv(again, h);
  std::ostringstream first;
  WriteRatingCsv(first, g);
  EXPECT_EQ(Read(again.str(), 1.0).edge_count(), g.edge_count());
}

TEST(RatingCsv, LoaderIsDeterministic) {
  const std::string text = "x,y,1\nz,x,-2\ny,z,3\n";
  EXPECT_EQ(Read(text).Edges(), Read(text).Edges());
  const Wsn g = Read(text);
  EXPECT_EQ(g.Label(0), "x");
  EXPECT_EQ(g.Label(1), "y");
  EXPECT_EQ(g.Label(2), "z");
}

TEST(Stats, EmptyGraphIsAllZero) {
  const Wsn g;
  const DatasetStats s = ComputeStats(g, ComputeFga(g));
  EXPECT_EQ(s.node_count, 0u);
  EXPECT_EQ(s.positive_edge_fraction, 0.0);
  EXPECT_EQ(s.fair_fraction_low, 0.0);
}

TEST(Stats, SmallGraph) {
  Wsn g(4);
  g.AddEdge(0, 1, 1.0);
  g.AddEdge(2, 1, -1.0);
  g.AddEdge(3, 1, 1.0);
  const FgaScores scores = ComputeFga(g);
  const DatasetStats s = ComputeStats(g, scores);
  EXPECT_EQ(s.node_count, 4u);
  EXPECT_EQ(s.edge_count, 3u);
  EXPECT_NEAR(s.positive_edge_fraction, 2.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(s.small_indegree_fraction, 1.0);
  const nlohmann::json j = StatsToJson(s);
  EXPECT_EQ(j["size"], 4);
}

TEST(Datasets, LookupAndFind) {
  const auto otc = LookupDataset("bitcoin-otc");
  ASSERT_TRUE(otc.has_value());
  EXPECT_EQ(otc->file, "soc-sign-bitcoinotc.csv");
  EXPECT_EQ(otc->r_max, 10.0);
  EXPECT_EQ(LookupDataset("rfa")->r_max, 1.0);
  EXPECT_FALSE(LookupDataset("epinions").has_value());

  const auto dir = std::filesystem::temp_directory_path() / "fga_io_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "rfa-net.csv") << "a,b,1\n";
  const auto found = FindDataset("rfa", dir);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->filename(), "rfa-net.csv");
  EXPECT_FALSE(FindDataset("bitcoin-alpha", dir).has_value());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace fga
