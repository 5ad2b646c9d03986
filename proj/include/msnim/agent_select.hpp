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

// Agent selection: choose agent(v) in {v} + friends(v) for every node so that
// the hop distance between communicating agents, summed over social edges,
// is small.
//
// The heuristic runs in two phases. The election phase (DAS) repeatedly
// elects the node whose agency would save the most, and assigns its
// unrepresented friends to it. The adjustment phase (MOR) then lets nodes
// switch agents in rounds of trying, checking and backward tracking, and
// commits a round only if the global objective falls.

#ifndef MSNIM_AGENT_SELECT_HPP_
#define MSNIM_AGENT_SELECT_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msnim/agent_assignment.hpp"
#include "msnim/diffusion.hpp"
#include "msnim/distance_oracle.hpp"
#include "msnim/layer_mapping.hpp"
#include "msnim/social_graph.hpp"

namespace msnim {

enum class WeightMode {
  kUniform,      // every social edge counts once
  kProbability,  // edge (u,v) counts p(u,v)
};

enum class TryingMode {
  kSequential,    // node v sees the tentative changes of nodes < v
  kSimultaneous,  // every node evaluates against the committed assignment
};

// Prices of the messages the heuristic itself sends.
struct ControlCostModel {
  // Multiplier on hop distance for node-to-node query/reply unicasts.
  std::uint64_t unicast_per_hop = 1;
  // Transmissions per network-wide broadcast. Unset: n - 1.
  std::optional<std::uint64_t> broadcast_cost;
  // Multiplier on hop distance for agent-to-agent directory notifications.
  std::uint64_t directory_per_hop = 1;

  std::uint64_t broadcast_for(std::size_t n) const {
    return broadcast_cost ? *broadcast_cost : (n == 0 ? 0 : n - 1);
  }
};

struct AsmtcParams {
  std::optional<Hops> alpha;                 // max hops from a node to its agent
  std::optional<std::size_t> beta;           // max committed agent changes per node
  std::optional<std::size_t> max_delegated;  // max nodes with agent != self
  WeightMode weight_mode = WeightMode::kUniform;
  TryingMode trying = TryingMode::kSequential;
  ControlCostModel control;
};

struct RmoReport {
  NodeId node = kNoNode;
  NodeId proposed_agent = kNoNode;
  // Objective before minus objective after; positive means less overhead.
  double delta = 0.0;
};

// Sum over social edges (u,v) of w(u,v) * d(agent(u), agent(v)). Throws
// InvalidLedgerError when two communicating agents have no route, and
// DomainError on size mismatches.
double objective(const SocialGraph& social, const AgentAssignment& assignment,
                 const DistanceOracle& oracle, const LayerMapping& mapping,
                 WeightMode weight_mode = WeightMode::kUniform);

// Change in the objective if `node` alone switched to `proposed_agent`.
// Throws DomainError when the proposal is not a candidate of `node` or lies
// beyond params.alpha, and InvalidLedgerError when it leaves an edge without
// a route.
RmoReport rmo_delta(const SocialGraph& social, const AgentAssignment& assignment, NodeId node,
                    NodeId proposed_agent, const DistanceOracle& oracle,
                    const LayerMapping& mapping, const AsmtcParams& params = {});

struct Election {
  NodeId agent = kNoNode;
  double estimated_reduction = 0.0;  // cost_w at election time
  double realized_reduction = 0.0;   // objective change caused by the commit
  std::vector<NodeId> represented;   // nodes newly represented, ascending
};

struct DasResult {
  AgentAssignment assignment;
  OverheadLedger ledger;
  std::vector<Election> elections;
  double initial_objective = 0.0;  // all-self
  double final_objective = 0.0;
  bool stopped_by_guard = false;   // best cost was <= 0
  bool stopped_by_budget = false;  // max_delegated reached
};

struct MorRound {
  double committed_before = 0.0;
  double committed_after = 0.0;
  std::size_t tried = 0;     // tentative changes made while trying
  std::size_t reverted = 0;  // changes undone by backward tracking
};

struct MorResult {
  AgentAssignment assignment;
  OverheadLedger ledger;
  // Objective of the input, then after every committed round. Strictly
  // decreasing.
  std::vector<double> committed_objectives;
  std::vector<MorRound> rounds;
};

struct AsmtcResult {
  AgentAssignment assignment;
  OverheadLedger ledger;  // das.ledger + mor.ledger
  DasResult das;
  MorResult mor;
  double baseline_objective = 0.0;
  double objective = 0.0;
};

DasResult das(const SocialGraph& social, const DistanceOracle& oracle, const LayerMapping& mapping,
              const AsmtcParams& params = {});

// `start` must represent every node.
MorResult mor(const SocialGraph& social, const AgentAssignment& start,
              const DistanceOracle& oracle, const LayerMapping& mapping,
              const AsmtcParams& params = {});

AsmtcResult asmtc(const SocialGraph& social, const DistanceOracle& oracle,
                  const LayerMapping& mapping, const AsmtcParams& params = {});

struct BruteForceResult {
  AgentAssignment assignment;
  double cost = 0.0;
  std::uint64_t combinations = 0;  // product of candidate-set sizes
};

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

// Exact minimum of the objective over every candidate assignment; ties go to
// the lexicographically smallest agent vector. Refuses with DomainError when
// the number of combinations exceeds `limit`.
BruteForceResult brute_force_asp(const SocialGraph& social, const DistanceOracle& oracle,
                                 const LayerMapping& mapping,
                                 WeightMode weight_mode = WeightMode::kUniform,
                                 std::uint64_t limit = kBruteForceLimit);

// CSV `node,agent` with node labels.
void write_assignment(std::ostream& out, const AgentAssignment& assignment,
                      const SocialGraph& social);
// Inverse of write_assignment. Nodes missing from the file are their own
// agent. Throws ParseError on malformed rows and unknown labels.
AgentAssignment read_assignment(std::istream& in, const SocialGraph& social);

// Applies `key = value` settings to `params`. Keys: alpha, beta,
// max_delegated (integer or "inf"), weight_mode (uniform|probability),
// trying (sequential|simultaneous), unicast_per_hop, broadcast_cost
// (integer or "auto"), directory_per_hop. Throws DomainError on an unknown
// key or bad value.
void set_asmtc_param(AsmtcParams& params, const std::string& key, const std::string& value);
void apply_asmtc_params(AsmtcParams& params, const std::map<std::string, std::string>& kv);

}  // namespace msnim

#endif  // MSNIM_AGENT_SELECT_HPP_
