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

#ifndef FGA_WSN_H_
#define FGA_WSN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fga {

// Dense node index. Ids are assigned in insertion order and never reused.
using NodeId = std::uint32_t;

// One endpoint of an adjacency entry: the neighbour and the edge weight.
struct Arc {
  NodeId node;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
  NodeId source;
  NodeId target;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    kWeightOutOfRange,
    kDuplicateEdge,
    kSelfLoop,
    kMissingEdge,
    kUnknownNode,
    kDuplicateLabel,
  };

  GraphError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Directed weighted signed network. Weights live in [-1, 1], there is at most
// one edge per ordered pair and no self-loops. Adjacency lists are kept
// sorted by neighbour id so that every sum over a neighbourhood is evaluated
// in the same order no matter how the graph was built.
class Wsn {
 public:
  Wsn() = default;
  explicit Wsn(std::size_t node_count);

  // Adds an unlabelled node. Its label defaults to the decimal id.
  NodeId AddNode();
  NodeId AddNode(std::string_view label);
  // Returns the id for `label`, creating the node on first use.
  NodeId InternLabel(std::string_view label);

  void AddEdge(NodeId u, NodeId v, double w);
  void UpdateWeight(NodeId u, NodeId v, double w);
  // Adds the edge or replaces its weight. Returns true if the edge was new.
  bool SetWeight(NodeId u, NodeId v, double w);
  void RemoveEdge(NodeId u, NodeId v);

  std::size_t node_count() const { return out_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool HasNode(NodeId v) const { return v < out_.size(); }
  bool HasEdge(NodeId u, NodeId v) const;
  std::optional<double> Weight(NodeId u, NodeId v) const;

  // Predecessors of v with the weight of (pred, v), sorted by pred id.
  std::span<const Arc> InArcs(NodeId v) const;
  // Successors of u with the weight of (u, succ), sorted by succ id.
  std::span<const Arc> OutArcs(NodeId u) const;
  std::vector<NodeId> Pred(NodeId v) const;
  std::vector<NodeId> Succ(NodeId u) const;
  std::size_t InDegree(NodeId v) const { return InArcs(v).size(); }
  std::size_t OutDegree(NodeId u) const { return OutArcs(u).size(); }

  // All edges ordered by (source, target).
  std::vector<Edge> Edges() const;

  const std::string& Label(NodeId v) const;
  std::optional<NodeId> FindLabel(std::string_view label) const;

 private:
  void CheckNode(NodeId v) const;
  static void CheckWeight(double w);

  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::size_t edge_count_ = 0;
};

// Neighbourhood summary of one node.
struct Neighbourhood {
  std::vector<NodeId> pred;
  std::vector<NodeId> succ;
  std::size_t indeg = 0;
  std::size_t outdeg = 0;
};

Neighbourhood Neighbours(const Wsn& g, NodeId v);

// Half-width of a symmetric raw rating scale, e.g. 10 for {-10, ..., 10}.
class RatingScale {
 public:
  explicit RatingScale(double r_max);
  double r_max() const { return r_max_; }

 private:
  double r_max_;
};

// Linear map of a raw rating onto [-1, 1].
double NormalizeRating(double raw, const RatingScale& scale);

}  // namespace fga

#endif  // FGA_WSN_H_
