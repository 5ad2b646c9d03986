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

#include "msnim/validate.hpp"

namespace msnim {

LayerDiagnostics validate_layers(const SocialGraph& social, const AdhocGraph& adhoc,
                                 const LayerMapping& mapping) {
  if (social.num_nodes() != adhoc.num_nodes()) {
    throw DomainError("social layer has " + std::to_string(social.num_nodes()) +
                      " nodes but ad-hoc layer has " + std::to_string(adhoc.num_nodes()));
  }
  if (mapping.size() != social.num_nodes()) {
    throw DomainError("mapping covers " + std::to_string(mapping.size()) + " nodes, layers have " +
                      std::to_string(social.num_nodes()));
  }

  LayerDiagnostics d;
  d.adhoc_components = adhoc.component_sizes();
  if (d.adhoc_components.size() > 1) {
    std::string sizes;
    for (std::size_t i = 0; i < d.adhoc_components.size(); ++i) {
      if (i) sizes += ',';
      sizes += std::to_string(d.adhoc_components[i]);
    }
    d.warnings.push_back("ad-hoc layer has " + std::to_string(d.adhoc_components.size()) +
                         " components (sizes " + sizes + ")");
  }
  for (NodeId v = 0; v < social.num_nodes(); ++v) {
    if (social.friends(v).empty()) d.isolated_social.push_back(v);
  }
  if (!d.isolated_social.empty()) {
    d.warnings.push_back(std::to_string(d.isolated_social.size()) + " social nodes have no friends");
  }
  return d;
}

}  // namespace msnim
