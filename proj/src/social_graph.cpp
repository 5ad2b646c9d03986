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

#include "msnim/social_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace msnim {

SocialGraph SocialGraph::from_edges(std::size_t n, std::span<const SocialEdge> edges,
                                    bool has_probabilities) {
  if (n >= kNoNode) throw DomainError("social graph too large");
  for (const auto& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw DomainError("edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                        ") out of range for " + std::to_string(n) + " nodes");
    }
    if (e.from == e.to) throw DomainError("self-loop on node " + std::to_string(e.from));
    if (!(e.p >= 0.0 && e.p <= 1.0)) {
      throw DomainError("probability " + std::to_string(e.p) + " outside [0, 1]");
    }
  }

  // Stable sort keeps input order among duplicates, so the last one wins.
  std::vector<SocialEdge> sorted(edges.begin(), edges.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const SocialEdge& a, const SocialEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  std::vector<SocialEdge> unique;
  unique.reserve(sorted.size());
  for (const auto& e : sorted) {
    if (!unique.empty() && unique.back().from == e.from && unique.back().to == e.to) {
      unique.back().p = e.p;
    } else {
      unique.push_back(e);
    }
  }
  if (unique.size() >= std::numeric_limits<EdgeId>::max()) throw DomainError("too many edges");

  SocialGraph g;
  g.has_probabilities_ = has_probabilities;
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const auto& e : unique) {
    ++g.out_offsets_[e.from + 1];
    ++g.in_offsets_[e.to + 1];
  }
  std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
  std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());

  g.out_arcs_.reserve(unique.size());
  g.edge_source_.reserve(unique.size());
  for (const auto& e : unique) {
    g.out_arcs_.push_back({e.to, e.p});
    g.edge_source_.push_back(e.from);
  }

  // Filling in-arcs in EdgeId order leaves each in-list sorted by source.
  g.in_arcs_.resize(unique.size());
  g.in_edge_ids_.resize(unique.size());
  std::vector<std::size_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (EdgeId id = 0; id < unique.size(); ++id) {
    const auto& e = unique[id];
    const std::size_t slot = cursor[e.to]++;
    g.in_arcs_[slot] = {e.from, e.p};
    g.in_edge_ids_[slot] = id;
  }

  g.friend_offsets_.assign(n + 1, 0);
  std::vector<NodeId> merged;
  for (NodeId v = 0; v < n; ++v) {
    merged.clear();
    for (const auto& a : g.out_edges(v)) merged.push_back(a.node);
    for (const auto& a : g.in_edges(v)) merged.push_back(a.node);
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    g.friends_.insert(g.friends_.end(), merged.begin(), merged.end());
    g.friend_offsets_[v + 1] = g.friends_.size();
  }

  g.labels_.resize(n);
  std::iota(g.labels_.begin(), g.labels_.end(), std::int64_t{0});
  return g;
}

void SocialGraph::set_labels(std::vector<std::int64_t> labels) {
  if (labels.size() != num_nodes()) throw DomainError("label table size mismatch");
  labels_ = std::move(labels);
}

std::vector<SocialEdge> SocialGraph::edges() const {
  std::vector<SocialEdge> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    out.push_back({edge_source_[e], out_arcs_[e].node, out_arcs_[e].p});
  }
  return out;
}

SocialGraph SocialGraph::with_probabilities(std::span<const double> per_edge) const {
  if (per_edge.size() != num_edges()) throw DomainError("probability vector size mismatch");
  SocialGraph g = *this;
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const double p = per_edge[e];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("probability " + std::to_string(p) + " outside [0, 1]");
    }
    g.out_arcs_[e].p = p;
  }
  for (std::size_t slot = 0; slot < g.in_arcs_.size(); ++slot) {
    g.in_arcs_[slot].p = per_edge[g.in_edge_ids_[slot]];
  }
  g.has_probabilities_ = true;
  return g;
}

}  // namespace msnim
