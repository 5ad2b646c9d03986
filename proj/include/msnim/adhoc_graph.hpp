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

#ifndef MSNIM_ADHOC_GRAPH_HPP_
#define MSNIM_ADHOC_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "msnim/types.hpp"

namespace msnim {

// Undirected, unweighted ad-hoc (MANET) connectivity graph. Links are radio
// neighbourhoods; message cost is counted in hops over these links.
class AdhocGraph {
 public:
  using Link = std::pair<NodeId, NodeId>;

  AdhocGraph() = default;

  // Pairs are unordered and deduplicated. Throws DomainError on self-loops
  // and out-of-range ids.
  static AdhocGraph from_links(std::size_t n, std::span<const Link> links);

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  // Number of undirected links.
  std::size_t num_links() const noexcept { return adj_.size() / 2; }

  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(NodeId a, NodeId b) const;

  // Each link once as (min, max), ascending.
  std::vector<Link> links() const;

  // Sizes of connected components, largest first.
  std::vector<std::size_t> component_sizes() const;

  std::span<const std::int64_t> labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::int64_t> labels);

  friend bool operator==(const AdhocGraph&, const AdhocGraph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<std::int64_t> labels_;
};

}  // namespace msnim

#endif  // MSNIM_ADHOC_GRAPH_HPP_
