// Copyright 2026 The Authors.
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

#ifndef MSNIM_SOCIAL_GRAPH_HPP_
#define MSNIM_SOCIAL_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "msnim/types.hpp"

namespace msnim {

// One adjacency entry: the node at the other end and the success probability
// of the underlying directed edge.
struct Arc {
  NodeId node;
  double p;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct SocialEdge {
  NodeId from;
  NodeId to;
  double p = 0.0;

  friend bool operator==(const SocialEdge&, const SocialEdge&) = default;
};

// Directed friendship graph with a success probability per edge.
//
// Stored as CSR in both directions. Out-arcs of a node are sorted by target,
// so an EdgeId (the index into the out-adjacency) is stable for a given edge
// set. In-arcs carry the EdgeId of the out-arc they mirror.
class SocialGraph {
 public:
  SocialGraph() = default;

  // Builds from edges over dense ids [0, n). Repeated (from, to) pairs keep
  // the last probability. Throws DomainError on self-loops, out-of-range ids
  // and probabilities outside [0, 1].
  static SocialGraph from_edges(std::size_t n, std::span<const SocialEdge> edges,
                                bool has_probabilities = true);

  std::size_t num_nodes() const noexcept { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return out_arcs_.size(); }

  std::span<const Arc> out_edges(NodeId u) const {
    return {out_arcs_.data() + out_offsets_[u], out_arcs_.data() + out_offsets_[u + 1]};
  }
  std::span<const Arc> in_edges(NodeId v) const {
    return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
  }
  // EdgeId of each entry of in_edges(v), index-aligned.
  std::span<const EdgeId> in_edge_ids(NodeId v) const {
    return {in_edge_ids_.data() + in_offsets_[v], in_edge_ids_.data() + in_offsets_[v + 1]};
  }
  // EdgeId of out_edges(u)[0]; out_edges(u)[i] has id first_out(u) + i.
  EdgeId first_out(NodeId u) const { return static_cast<EdgeId>(out_offsets_[u]); }
  NodeId edge_source(EdgeId e) const { return edge_source_[e]; }
  const Arc& edge(EdgeId e) const { return out_arcs_[e]; }

  std::size_t out_degree(NodeId u) const { return out_offsets_[u + 1] - out_offsets_[u]; }
  std::size_t in_degree(NodeId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  // Social neighbours in either direction, ascending and without repeats.
  std::span<const NodeId> friends(NodeId v) const {
    return {friends_.data() + friend_offsets_[v], friends_.data() + friend_offsets_[v + 1]};
  }

  // False when the graph was loaded from an edge list without a probability
  // column; the stored probabilities are then 0 until a model assigns them.
  bool has_probabilities() const noexcept { return has_probabilities_; }

  // Original label of each dense id (defaults to the id itself).
  std::span<const std::int64_t> labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::int64_t> labels);

  std::vector<SocialEdge> edges() const;

  // Same topology with per-EdgeId probabilities replaced.
  SocialGraph with_probabilities(std::span<const double> per_edge) const;

  friend bool operator==(const SocialGraph&, const SocialGraph&) = default;

 private:
  std::vector<std::size_t> out_offsets_;
  std::vector<Arc> out_arcs_;
  std::vector<NodeId> edge_source_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Arc> in_arcs_;
  std::vector<EdgeId> in_edge_ids_;
  std::vector<std::size_t> friend_offsets_;
  std::vector<NodeId> friends_;
  std::vector<std::int64_t> labels_;
  bool has_probabilities_ = true;
};

}  // namespace msnim

#endif  // MSNIM_SOCIAL_GRAPH_HPP_
