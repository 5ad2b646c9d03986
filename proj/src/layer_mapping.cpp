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

#include "msnim/layer_mapping.hpp"

#include <numeric>
#include <string>

namespace msnim {

LayerMapping LayerMapping::identity(std::size_t n) {
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  return from_permutation(std::move(ids));
}

LayerMapping LayerMapping::from_permutation(std::vector<NodeId> social_to_adhoc) {
  LayerMapping m;
  m.backward_.assign(social_to_adhoc.size(), kNoNode);
  for (NodeId s = 0; s < social_to_adhoc.size(); ++s) {
    const NodeId a = social_to_adhoc[s];
    if (a >= social_to_adhoc.size()) {
      throw DomainError("mapping target " + std::to_string(a) + " out of range");
    }
    if (m.backward_[a] != kNoNode) {
      throw DomainError("mapping is not injective: ad-hoc node " + std::to_string(a) +
                        " used twice");
    }
    m.backward_[a] = s;
  }
  m.forward_ = std::move(social_to_adhoc);
  return m;
}

LayerMapping LayerMapping::inverse() const {
  LayerMapping m;
  m.forward_ = backward_;
  m.backward_ = forward_;
  return m;
}

LayerMapping LayerMapping::after(const LayerMapping& first) const {
  if (first.size() != size()) throw DomainError("mapping size mismatch");
  std::vector<NodeId> composed(size());
  for (NodeId s = 0; s < size(); ++s) composed[s] = forward_[first.forward_[s]];
  return from_permutation(std::move(composed));
}

}  // namespace msnim
