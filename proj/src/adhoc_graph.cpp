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

#include "msnim/adhoc_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace msnim {

AdhocGraph AdhocGraph::from_links(std::size_t n, std::span<const Link> links) {
  if (n >= kNoNode) throw DomainError("ad-hoc graph too large");
  std::vector<Link> both;
  both.reserve(links.size() * 2);
  for (auto [a, b] : links) {
    if (a >= n || b >= n) {
      throw DomainError("link (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") out of range for " + std::to_string(n) + " nodes");
    }
    if (a == b) throw DomainError("self-loop on ad-hoc node " + std::to_string(a));
    both.emplace_back(a, b);
    both.emplace_back(b, a);
  }
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());

  AdhocGraph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [a, b] : both) ++g.offsets_[a + 1];
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adj_.reserve(both.size());
  for (auto [a, b] : both) g.adj_.push_back(b);
  g.labels_.resize(n);
  std::iota(g.labels_.begin(), g.labels_.end(), std::int64_t{0});
  return g;
}

bool AdhocGraph::adjacent(NodeId a, NodeId b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<AdhocGraph::Link> AdhocGraph::links() const {
  std::vector<Link> out;
  out.reserve(num_links());
  for (NodeId a = 0; a < num_nodes(); ++a) {
    for (NodeId b : neighbors(a)) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> AdhocGraph::component_sizes() const {
  const std::size_t n = num_nodes();
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack;
  std::vector<std::size_t> sizes;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t size = 0;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId w : neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

void AdhocGraph::set_labels(std::vector<std::int64_t> labels) {
  if (labels.size() != num_nodes()) throw DomainError("label table size mismatch");
  labels_ = std::move(labels);
}

}  // namespace msnim
