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

#include <algorithm>
#include <cmath>

namespace fga {
namespace {

using ArcList = std::vector<Arc>;

ArcList::iterator LowerBound(ArcList& arcs, NodeId node) {
  return std::lower_bound(
      arcs.begin(), arcs.end(), node,
      [](const Arc& a, NodeId n) { return a.node < n; });
}

ArcList::const_iterator LowerBound(const ArcList& arcs, NodeId node) {
  return std::lower_bound(
      arcs.begin(), arcs.end(), node,
      [](const Arc& a, NodeId n) { return a.node < n; });
}

Arc* FindArc(ArcList& arcs, NodeId node) {
  auto it = LowerBound(arcs, node);
  return (it != arcs.end() && it->node == node) ? &*it : nullptr;
}

void InsertArc(ArcList& arcs, Arc arc) {
  arcs.insert(LowerBound(arcs, arc.node), arc);
}

void EraseArc(ArcList& arcs, NodeId node) {
  arcs.erase(LowerBound(arcs, node));
}

std::string PairName(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Wsn::Wsn(std::size_t node_count) {
  for (std::size_t i = 0; i < node_count; ++i) AddNode();
}

NodeId Wsn::AddNode() {
  return AddNode(std::to_string(out_.size()));
}

NodeId Wsn::AddNode(std::string_view label) {
  std::string key(label);
  if (label_index_.contains(key)) {
    throw GraphError(GraphError::Kind::kDuplicateLabel,
                     "duplicate node label '" + key + "'");
  }
  const auto id = static_cast<NodeId>(out_.size());
  out_.emplace_back();
  in_.emplace_back();
  labels_.push_back(key);
  label_index_.emplace(std::move(key), id);
  return id;
}

NodeId Wsn::InternLabel(std::string_view label) {
  if (auto id = FindLabel(label)) return *id;
  return AddNode(label);
}

void Wsn::CheckNode(NodeId v) const {
  if (!HasNode(v)) {
    throw GraphError(GraphError::Kind::kUnknownNode,
                     "unknown node " + std::to_string(v));
  }
}

void Wsn::CheckWeight(double w) {
  if (!(w >= -1.0 && w <= 1.0)) {
    throw GraphError(GraphError::Kind::kWeightOutOfRange,
                     "weight " + std::to_string(w) + " outside [-1, 1]");
  }
}

void Wsn::AddEdge(NodeId u, NodeId v, double w) {
  CheckNode(u);
  CheckNode(v);
  if (u == v) {
    throw GraphError(GraphError::Kind::kSelfLoop,
                     "self-loop on node " + std::to_string(u));
  }
  CheckWeight(w);
  if (HasEdge(u, v)) {
    throw GraphError(GraphError::Kind::kDuplicateEdge,
                     "edge " + PairName(u, v) + " already exists");
  }
  InsertArc(out_[u], {v, w});
  InsertArc(in_[v], {u, w});
  ++edge_count_;
}

void Wsn::UpdateWeight(NodeId u, NodeId v, double w) {
  CheckNode(u);
  CheckNode(v);
  CheckWeight(w);
  Arc* out = FindArc(out_[u], v);
  if (out == nullptr) {
    throw GraphError(GraphError::Kind::kMissingEdge,
                     "edge " + PairName(u, v) + " does not exist");
  }
  out->weight = w;
  FindArc(in_[v], u)->weight = w;
}

bool Wsn::SetWeight(NodeId u, NodeId v, double w) {
  if (HasEdge(u, v)) {
    UpdateWeight(u, v, w);
    return false;
  }
  AddEdge(u, v, w);
  return true;
}

void Wsn::RemoveEdge(NodeId u, NodeId v) {
  if (!HasEdge(u, v)) {
    throw GraphError(GraphError::Kind::kMissingEdge,
                     "edge " + PairName(u, v) + " does not exist");
  }
  EraseArc(out_[u], v);
  EraseArc(in_[v], u);
  --edge_count_;
}

bool Wsn::HasEdge(NodeId u, NodeId v) const {
  return Weight(u, v).has_value();
}

std::optional<double> Wsn::Weight(NodeId u, NodeId v) const {
  if (!HasNode(u) || !HasNode(v)) return std::nullopt;
  const ArcList& arcs = out_[u];
  auto it = LowerBound(arcs, v);
  if (it == arcs.end() || it->node != v) return std::nullopt;
  return it->weight;
}

std::span<const Arc> Wsn::InArcs(NodeId v) const {
  CheckNode(v);
  return in_[v];
}

std::span<const Arc> Wsn::OutArcs(NodeId u) const {
  CheckNode(u);
  return out_[u];
}

std::vector<NodeId> Wsn::Pred(NodeId v) const {
  std::vector<NodeId> out;
  for (const Arc& a : InArcs(v)) out.push_back(a.node);
  return out;
}

std::vector<NodeId> Wsn::Succ(NodeId u) const {
  std::vector<NodeId> out;
  for (const Arc& a : OutArcs(u)) out.push_back(a.node);
  return out;
}

std::vector<Edge> Wsn::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  for (NodeId u = 0; u < out_.size(); ++u) {
    for (const Arc& a : out_[u]) edges.push_back({u, a.node, a.weight});
  }
  return edges;
}

const std::string& Wsn::Label(NodeId v) const {
  CheckNode(v);
  return labels_[v];
}

std::optional<NodeId> Wsn::FindLabel(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

Neighbourhood Neighbours(const Wsn& g, NodeId v) {
  Neighbourhood n;
  n.pred = g.Pred(v);
  n.succ = g.Succ(v);
  n.indeg = n.pred.size();
  n.outdeg = n.succ.size();
  return n;
}

RatingScale::RatingScale(double r_max) : r_max_(r_max) {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw std::invalid_argument("rating scale half-width must be positive");
  }
}

double NormalizeRating(double raw, const RatingScale& scale) {
  if (!(std::abs(raw) <= scale.r_max())) {
    throw GraphError(GraphError::Kind::kWeightOutOfRange,
                     "rating " + std::to_string(raw) + " outside +/-" +
                         std::to_string(scale.r_max()));
  }
  return raw / scale.r_max();
}

}  // namespace fga
