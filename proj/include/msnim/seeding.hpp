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

// Seed selection (greedy and CELF) and the message cost of running that
// selection distributedly over the ad-hoc layer.
//
// By default every spread evaluation reuses the same trial pool (common
// random numbers). Spread is then a coverage function of the live-edge
// realisations, which makes it exactly submodular, and CELF returns the same
// seeds, order and gains as plain greedy.

#ifndef MSNIM_SEEDING_HPP_
#define MSNIM_SEEDING_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "msnim/agent_assignment.hpp"
#include "msnim/diffusion.hpp"
#include "msnim/distance_oracle.hpp"
#include "msnim/layer_mapping.hpp"
#include "msnim/social_graph.hpp"

namespace msnim {

enum class SeedAlgorithm { kGreedy, kCelf };

enum class PoolMode {
  kShared,       // one pool for every evaluation
  kIndependent,  // each (iteration, candidate) evaluation draws its own pool
};

struct SeedingOptions {
  PoolMode pool_mode = PoolMode::kShared;
  // Restrict candidates to the `cap` nodes of largest out-degree (ties by
  // smaller id). Unset: every node is a candidate.
  std::optional<std::size_t> candidate_cap;
  unsigned workers = 1;
};

struct SeedSelection {
  std::vector<NodeId> seeds;
  // Mean marginal spread of each pick.
  std::vector<double> marginal_gains;
  // Total spread evaluations performed when each seed was committed.
  std::vector<std::uint64_t> lookups_at_pick;
  std::uint64_t lookups = 0;
  // Candidate universe, ascending.
  std::vector<NodeId> candidates;
  std::optional<std::size_t> candidate_cap;

  double spread() const;
};

// Throws DomainError unless 1 <= K <= number of candidates.
SeedSelection greedy_select(const SocialGraph& social, std::size_t k, const TrialPool& pool,
                            const SeedingOptions& options = {});
SeedSelection celf_select(const SocialGraph& social, std::size_t k, const TrialPool& pool,
                          const SeedingOptions& options = {});
SeedSelection select_seeds(SeedAlgorithm algorithm, const SocialGraph& social, std::size_t k,
                           const TrialPool& pool, const SeedingOptions& options = {});

// Shared-pool variants over a pool that is already materialised.
SeedSelection greedy_select(const SocialGraph& social, std::size_t k, const LiveEdgePool& live,
                            const SeedingOptions& options = {});
SeedSelection celf_select(const SocialGraph& social, std::size_t k, const LiveEdgePool& live,
                          const SeedingOptions& options = {});

// CSV `rank,node,marginal_gain,lookups_so_far` (node labels, rank from 1).
void write_selection(std::ostream& out, const SeedSelection& selection, const SocialGraph& social);

enum class ReturnRoute {
  kAgentToAgent,  // agent(x) -> agent(w)
  kNodeToNode,    // x -> w
  kNone,
};

struct DeploymentCostModel {
  // Transmissions per network-wide broadcast; unset means n - 1 (a flooding
  // spanning tree).
  std::optional<std::uint64_t> broadcast_cost;
  ReturnRoute returns = ReturnRoute::kAgentToAgent;

  std::uint64_t broadcast_for(std::size_t n) const {
    return broadcast_cost ? *broadcast_cost : (n == 0 ? 0 : n - 1);
  }
};

struct DeploymentOptions {
  // Candidates evaluated in every iteration (seeds already chosen are
  // skipped). Unset: the selection's candidate universe.
  std::optional<std::vector<NodeId>> candidates;
  unsigned workers = 1;
};

struct DeploymentReport {
  OverheadLedger total;
  std::vector<OverheadLedger> per_iteration;
  std::uint64_t evaluations = 0;
};

// Replays the distributed greedy: in iteration i every candidate w runs all
// trials from S_{i-1} + {w}. Per trial, each successful influence costs the
// hop distance between the two agents, and every activated node x != w
// returns its state to w. Each candidate then broadcasts its spread once.
// Throws InvalidLedgerError on a missing route.
DeploymentReport deployment_overhead(const SocialGraph& social, const SeedSelection& selection,
                                     const AgentAssignment& assignment,
                                     const DistanceOracle& oracle, const LayerMapping& mapping,
                                     const LiveEdgePool& live, const DeploymentCostModel& model,
                                     const DeploymentOptions& options = {});
DeploymentReport deployment_overhead(const SocialGraph& social, const SeedSelection& selection,
                                     const AgentAssignment& assignment,
                                     const DistanceOracle& oracle, const LayerMapping& mapping,
                                     const TrialPool& pool, const DeploymentCostModel& model,
                                     const DeploymentOptions& options = {});

}  // namespace msnim

#endif  // MSNIM_SEEDING_HPP_
