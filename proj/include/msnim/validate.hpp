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

#ifndef MSNIM_VALIDATE_HPP_
#define MSNIM_VALIDATE_HPP_

#include <string>
#include <vector>

#include "msnim/adhoc_graph.hpp"
#include "msnim/layer_mapping.hpp"
#include "msnim/social_graph.hpp"

namespace msnim {

struct LayerDiagnostics {
  // Largest first. More than one entry means some agent pairs have no route.
  std::vector<std::size_t> adhoc_components;
  std::vector<NodeId> isolated_social;
  std::vector<std::string> warnings;

  bool clean() const { return warnings.empty(); }
};

// Throws DomainError when the layers or the mapping disagree on node count.
// Everything else is reported, never fixed.
LayerDiagnostics validate_layers(const SocialGraph& social, const AdhocGraph& adhoc,
                                 const LayerMapping& mapping);

}  // namespace msnim

#endif  // MSNIM_VALIDATE_HPP_
