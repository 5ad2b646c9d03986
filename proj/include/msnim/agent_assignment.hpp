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

#ifndef MSNIM_AGENT_ASSIGNMENT_HPP_
#define MSNIM_AGENT_ASSIGNMENT_HPP_

#include <span>
#include <vector>

#include "msnim/layer_mapping.hpp"
#include "msnim/social_graph.hpp"

namespace msnim {

// agent(v) for every social node: the node that sends and receives messages
// on v's behalf. agent(v) must be v itself or one of v's friends.
class AgentAssignment {
 public:
  AgentAssignment() = default;

  // Every node is its own agent and counts as represented.
  static AgentAssignment all_self(std::size_t n);
  // Every node counts as represented.
  static AgentAssignment from_agents(std::vector<NodeId> agents);

  std::size_t size() const noexcept { return agent_.size(); }
  NodeId agent(NodeId v) const { return agent_[v]; }
  std::span<const NodeId> agents() const noexcept { return agent_; }
  void set_agent(NodeId v, NodeId a);

  bool represented(NodeId v) const { return represented_[v] != 0; }
  void set_represented(NodeId v, bool value) { represented_[v] = value ? 1 : 0; }
  bool all_represented() const;

  // Nodes whose agent is someone else.
  std::size_t delegated_count() const noexcept { return delegated_; }

  // Throws DomainError when some agent(v) is neither v nor a friend of v.
  void check_candidates(const SocialGraph& social) const;

  // Ad-hoc position of each node's agent.
  std::vector<NodeId> agent_positions(const LayerMapping& mapping) const;

  friend bool operator==(const AgentAssignment& a, const AgentAssignment& b) {
    return a.agent_ == b.agent_;
  }

 private:
  std::vector<NodeId> agent_;
  std::vector<char> represented_;
  std::size_t delegated_ = 0;
};

// True when `candidate` is `v` or a friend of `v`.
bool is_candidate_agent(const SocialGraph& social, NodeId v, NodeId candidate);

}  // namespace msnim

#endif  // MSNIM_AGENT_ASSIGNMENT_HPP_
