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

#ifndef MSNIM_DISTANCE_ORACLE_HPP_
#define MSNIM_DISTANCE_ORACLE_HPP_

#include <deque>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "msnim/adhoc_graph.hpp"

namespace msnim {

// Hop distances over an AdhocGraph. One BFS row per source, computed on
// first use and memoized. Safe for concurrent readers: two threads missing
// the same row may both run the BFS, and the first insert wins.
//
// The graph must outlive the oracle.
class DistanceOracle {
 public:
  using Row = std::vector<Hops>;
  using RowPtr = std::shared_ptr<const Row>;

  // `row_capacity` bounds the number of cached rows (oldest evicted first);
  // nullopt keeps every row.
  explicit DistanceOracle(const AdhocGraph& graph,
                          std::optional<std::size_t> row_capacity = std::nullopt);
  explicit DistanceOracle(AdhocGraph&&, std::optional<std::size_t> = std::nullopt) = delete;

  DistanceOracle(const DistanceOracle&) = delete;
  DistanceOracle& operator=(const DistanceOracle&) = delete;

  const AdhocGraph& graph() const noexcept { return graph_; }
  std::size_t num_nodes() const noexcept { return graph_.num_nodes(); }

  // Distances from `source` to every node; kUnreachable where disconnected.
  RowPtr row(NodeId source) const;
  Hops distance(NodeId a, NodeId b) const { return (*row(a))[b]; }

  std::size_t cached_rows() const;

  static Row bfs(const AdhocGraph& graph, NodeId source);

 private:
  const AdhocGraph& graph_;
  std::optional<std::size_t> capacity_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<RowPtr> rows_;
  mutable std::deque<NodeId> fill_order_;
};

}  // namespace msnim

#endif  // MSNIM_DISTANCE_ORACLE_HPP_
