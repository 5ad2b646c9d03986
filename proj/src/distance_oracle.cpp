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

#include "msnim/distance_oracle.hpp"

#include <mutex>
#include <string>

namespace msnim {

DistanceOracle::DistanceOracle(const AdhocGraph& graph, std::optional<std::size_t> row_capacity)
    : graph_(graph), capacity_(row_capacity), rows_(graph.num_nodes()) {
  if (capacity_ && *capacity_ == 0) throw DomainError("row cache capacity must be positive");
}

DistanceOracle::Row DistanceOracle::bfs(const AdhocGraph& graph, NodeId source) {
  Row dist(graph.num_nodes(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(graph.num_nodes());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : graph.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceOracle::RowPtr DistanceOracle::row(NodeId source) const {
  if (source >= rows_.size()) {
    throw DomainError("ad-hoc node " + std::to_string(source) + " out of range");
  }
  {
    std::shared_lock lock(mutex_);
    if (rows_[source]) return rows_[source];
  }
  auto fresh = std::make_shared<const Row>(bfs(graph_, source));
  std::unique_lock lock(mutex_);
  if (rows_[source]) return rows_[source];
  rows_[source] = fresh;
  if (capacity_) {
    fill_order_.push_back(source);
    while (fill_order_.size() > *capacity_) {
      rows_[fill_order_.front()].reset();
      fill_order_.pop_front();
    }
  }
  return fresh;
}

std::size_t DistanceOracle::cached_rows() const {
  std::shared_lock lock(mutex_);
  std::size_t count = 0;
  for (const auto& r : rows_) count += r ? 1 : 0;
  return count;
}

}  // namespace msnim
