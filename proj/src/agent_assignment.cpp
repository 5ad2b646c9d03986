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

#include "msnim/agent_assignment.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace msnim {

AgentAssignment AgentAssignment::all_self(std::size_t n) {
  std::vector<NodeId> agents(n);
  std::iota(agents.begin(), agents.end(), NodeId{0});
  return from_agents(std::move(agents));
}

AgentAssignment AgentAssignment::from_agents(std::vector<NodeId> agents) {
  AgentAssignment a;
  a.represented_.assign(agents.size(), 1);
  for (NodeId v = 0; v < agents.size(); ++v) {
    if (agents[v] >= agents.size()) {
      throw DomainError("agent " + std::to_string(agents[v]) + " of node " + std::to_string(v) +
                        " out of range");
    }
    if (agents[v] != v) ++a.delegated_;
  }
  a.agent_ = std::move(agents);
  return a;
}

void AgentAssignment::set_agent(NodeId v, NodeId a) {
  if (a >= agent_.size()) throw DomainError("agent " + std::to_string(a) + " out of range");
  if (agent_[v] != v) --delegated_;
  agent_[v] = a;
  if (a != v) ++delegated_;
}

bool AgentAssignment::all_represented() const {
  return std::all_of(represented_.begin(), represented_.end(), [](char r) { return r != 0; });
}

void AgentAssignment::check_candidates(const SocialGraph& social) const {
  if (size() != social.num_nodes()) throw DomainError("assignment size does not match graph");
  for (NodeId v = 0; v < size(); ++v) {
    if (!is_candidate_agent(social, v, agent_[v])) {
      throw DomainError("agent " + std::to_string(agent_[v]) + " is not a candidate for node " +
                        std::to_string(v));
    }
  }
}

std::vector<NodeId> AgentAssignment::agent_positions(const LayerMapping& mapping) const {
  if (mapping.size() != size()) throw DomainError("mapping size does not match assignment");
  std::vector<NodeId> pos(size());
  for (NodeId v = 0; v < size(); ++v) pos[v] = mapping.to_adhoc(agent_[v]);
  return pos;
}

bool is_candidate_agent(const SocialGraph& social, NodeId v, NodeId candidate) {
  if (candidate == v) return true;
  auto f = social.friends(v);
  return std::binary_search(f.begin(), f.end(), candidate);
}

}  // namespace msnim
