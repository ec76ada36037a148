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

#include "fga/wsn.h"

#include <gtest/gtest.h>

#include <functional>

namespace fga {
namespace {

GraphError::Kind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no GraphError thrown";
  return GraphError::Kind::kUnknownNode;
}

TEST(Wsn, AddEdgeAndQuery) {
  Wsn g(3);
  g.AddEdge(0, 1, 0.5);
  g.AddEdge(2, 1, -1.0);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.HasEdge(0, 1));
  EXPECT_FALSE(g.HasEdge(1, 0));
  EXPECT_EQ(*g.Weight(2, 1), -1.0);
  EXPECT_FALSE(g.Weight(1, 2).has_value());
  EXPECT_EQ(g.InDegree(1), 2u);
  EXPECT_EQ(g.OutDegree(0), 1u);
  EXPECT_EQ(g.Pred(1), (std::vector<NodeId>{0, 2}));
  EXPECT_EQ(g.Succ(2), (std::vector<NodeId>{1}));
}

TEST(Wsn, RejectsInvalidEdges) {
  Wsn g(2);
  EXPECT_EQ(KindOf([&] { g.AddEdge(0, 1, 1.5); }),
            GraphError::Kind::kWeightOutOfRange);
  EXPECT_EQ(KindOf([&] { g.AddEdge(0, 0, 0.1); }), GraphError::Kind::kSelfLoop);
  EXPECT_EQ(KindOf([&] { g.AddEdge(0, 7, 0.1); }),
            GraphError::Kind::kUnknownNode);
  g.AddEdge(0, 1, 0.1);
  EXPECT_EQ(KindOf([&] { g.AddEdge(0, 1, 0.2); }),
            GraphError::Kind::kDuplicateEdge);
  EXPECT_EQ(KindOf([&] { g.UpdateWeight(1, 0, 0.2); }),
            GraphError::Kind::kMissingEdge);
  EXPECT_EQ(KindOf([&] { g.RemoveEdge(1, 0); }),
            GraphError::Kind::kMissingEdge);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(*g.Weight(0, 1), 0.1);
}

TEST(Wsn, UpdateSetAndRemove) {
  Wsn g(3);
  g.AddEdge(0, 1, 0.5);
  g.UpdateWeight(0, 1, -0.5);
  EXPECT_EQ(*g.Weight(0, 1), -0.5);
  EXPECT_EQ(*g.InArcs(1).begin(), (Arc{0, -0.5}));
  EXPECT_TRUE(g.SetWeight(0, 2, 1.0));
  EXPECT_FALSE(g.SetWeight(0, 2, 0.0));
  EXPECT_EQ(*g.Weight(0, 2), 0.0);
  g.RemoveEdge(0, 1);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.InDegree(1), 0u);
}

TEST(Wsn, AdjacencyIsSortedWhateverTheInsertionOrder) {
  Wsn g(6);
  for (NodeId u : {5u, 1u, 3u, 2u}) g.AddEdge(u, 0, 0.1 * u);
  const auto in = g.InArcs(0);
  for (std::size_t i = 1; i < in.size(); ++i) {
    EXPECT_LT(in[i - 1].node, in[i].node);
  }
  const auto edges = g.Edges();
  ASSERT_EQ(edges.size(), 4u);
  EXPECT_EQ(edges.front().source, 1u);
  EXPECT_EQ(edges.back().source, 5u);
}

TEST(Wsn, Labels) {
  Wsn g;
  const NodeId a = g.AddNode("alice");
  const NodeId b = g.AddNode();
  EXPECT_EQ(g.Label(a), "alice");
  EXPECT_EQ(g.Label(b), "1");
  EXPECT_EQ(g.InternLabel("alice"), a);
  const NodeId c = g.InternLabel("carol");
  EXPECT_EQ(c, 2u);
  EXPECT_EQ(*g.FindLabel("carol"), c);
  EXPECT_FALSE(g.FindLabel("dave").has_value());
  EXPECT_EQ(KindOf([&] { g.AddNode("alice"); }),
            GraphError::Kind::kDuplicateLabel);
}

TEST(Wsn, Neighbourhood) {
  Wsn g(4);
  g.AddEdge(0, 1, 1.0);
  g.AddEdge(2, 1, 1.0);
  g.AddEdge(1, 3, -1.0);
  const Neighbourhood n = Neighbours(g, 1);
  EXPECT_EQ(n.pred, (std::vector<NodeId>{0, 2}));
  EXPECT_EQ(n.succ, (std::vector<NodeId>{3}));
  EXPECT_EQ(n.indeg, 2u);
  EXPECT_EQ(n.outdeg, 1u);
}

TEST(RatingScale, Normalizes) {
  const RatingScale ten(10.0);
  EXPECT_DOUBLE_EQ(NormalizeRating(-10, ten), -1.0);
  EXPECT_DOUBLE_EQ(NormalizeRating(3, ten), 0.3);
  EXPECT_DOUBLE_EQ(NormalizeRating(0, ten), 0.0);
  EXPECT_THROW(NormalizeRating(11, ten), GraphError);
  EXPECT_THROW(RatingScale(0.0), std::invalid_argument);
}

}  // namespace
}  // namespace fga
