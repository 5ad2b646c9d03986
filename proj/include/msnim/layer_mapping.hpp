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

#ifndef MSNIM_LAYER_MAPPING_HPP_
#define MSNIM_LAYER_MAPPING_HPP_

#include <span>
#include <vector>

#include "msnim/types.hpp"

namespace msnim {

// Bijection from social node ids to the ad-hoc node carrying that person.
class LayerMapping {
 public:
  LayerMapping() = default;

  static LayerMapping identity(std::size_t n);
  // Throws DomainError unless `social_to_adhoc` is a permutation of [0, n).
  static LayerMapping from_permutation(std::vector<NodeId> social_to_adhoc);

  std::size_t size() const noexcept { return forward_.size(); }
  NodeId to_adhoc(NodeId social) const { return forward_[social]; }
  NodeId to_social(NodeId adhoc) const { return backward_[adhoc]; }
  std::span<const NodeId> social_to_adhoc() const noexcept { return forward_; }

  LayerMapping inverse() const;
  // (this ∘ first): social -> first -> this.
  LayerMapping after(const LayerMapping& first) const;

  friend bool operator==(const LayerMapping&, const LayerMapping&) = default;

 private:
  std::vector<NodeId> forward_;
  std::vector<NodeId> backward_;
};

}  // namespace msnim

#endif  // MSNIM_LAYER_MAPPING_HPP_
