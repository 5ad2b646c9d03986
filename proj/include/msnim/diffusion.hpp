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

// Independent Cascade trials in live-edge form.
//
// Edge (u,v) is live in trial t iff coin(base_seed, t, u, v) < p(u,v). A trial
// activates exactly the nodes reachable from the seeds over live edges; the
// activation log is the BFS over live edges with rounds, where each round's
// frontier is scanned in ascending node order and each node's out-arcs in
// ascending target order. That order is what makes the log canonical: a node
// reached by several live arcs in one round is credited to the smallest
// source.

#ifndef MSNIM_DIFFUSION_HPP_
#define MSNIM_DIFFUSION_HPP_

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "msnim/agent_assignment.hpp"
#include "msnim/distance_oracle.hpp"
#include "msnim/layer_mapping.hpp"
#include "msnim/rng.hpp"
#include "msnim/social_graph.hpp"

namespace msnim {

struct TrialPool {
  std::uint64_t base_seed = 0;
  std::size_t trials = 1000;

  bool edge_live(const SocialGraph& g, std::size_t t, EdgeId e) const {
    const Arc& a = g.edge(e);
    return coin(base_seed, t, g.edge_source(e), a.node) < a.p;
  }
};

struct Activation {
  NodeId u;
  NodeId v;
  std::uint32_t round;
  EdgeId edge;

  friend bool operator==(const Activation&, const Activation&) = default;
};

struct TrialOutcome {
  // Seeds (ascending) first, then nodes in activation order.
  std::vector<NodeId> activated;
  std::vector<Activation> activations;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

// Running counters of message cost, in hops (or transmissions for
// broadcasts). Counters only grow.
struct OverheadLedger {
  std::uint64_t influence_hops = 0;
  std::uint64_t return_hops = 0;
  std::uint64_t broadcast_tx = 0;
  std::uint64_t control_hops = 0;

  std::uint64_t total() const { return influence_hops + return_hops + broadcast_tx + control_hops; }

  OverheadLedger& operator+=(const OverheadLedger& o) {
    influence_hops += o.influence_hops;
    return_hops += o.return_hops;
    broadcast_tx += o.broadcast_tx;
    control_hops += o.control_hops;
    return *this;
  }
  friend OverheadLedger operator+(OverheadLedger a, const OverheadLedger& b) { return a += b; }
  friend bool operator==(const OverheadLedger&, const OverheadLedger&) = default;
};

// Per-thread BFS state for repeated cascades over one graph.
class CascadeScratch {
 public:
  explicit CascadeScratch(std::size_t n) : stamp_(n, 0) {}

  // Runs one cascade. `live_out(u, emit)` must call emit(v, edge) for every
  // live out-arc of u in ascending v. `on_activate(u, v, round, edge)` sees
  // activations in canonical order. Nodes marked by block() before the call
  // behave as already active. Returns the number of newly active nodes,
  // seeds included.
  template <class LiveOut, class OnActivate>
  std::size_t run(std::span<const NodeId> seeds, LiveOut&& live_out, OnActivate&& on_activate) {
    begin_if_needed();
    std::size_t count = 0;
    frontier_.clear();
    for (NodeId s : seeds) {
      if (stamp_[s] == epoch_) continue;
      stamp_[s] = epoch_;
      activated_.push_back(s);
      frontier_.push_back(s);
      ++count;
    }
    std::sort(frontier_.begin(), frontier_.end());
    std::uint32_t round = 0;
    while (!frontier_.empty()) {
      ++round;
      next_.clear();
      for (NodeId u : frontier_) {
        live_out(u, [&](NodeId v, EdgeId e) {
          if (stamp_[v] == epoch_) return;
          stamp_[v] = epoch_;
          activated_.push_back(v);
          next_.push_back(v);
          ++count;
          on_activate(u, v, round, e);
        });
      }
      std::sort(next_.begin(), next_.end());
      frontier_.swap(next_);
    }
    pending_ = true;
    return count;
  }

  // Marks v active for the next run() without starting from it. Blocks last
  // for one run.
  void block(NodeId v) {
    begin_if_needed();
    stamp_[v] = epoch_;
  }

  // Active nodes of the last run, in activation order (blocked nodes excluded).
  std::span<const NodeId> activated() const noexcept { return activated_; }

  // Drops blocks placed since the last run.
  void reset() { pending_ = true; }

 private:
  void begin_if_needed() {
    if (!pending_) return;
    pending_ = false;
    activated_.clear();
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  bool pending_ = true;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> next_;
  std::vector<NodeId> activated_;
};

// Live out-arcs of every trial of a pool, materialised once. Each trial's
// arcs are stored in EdgeId order, which is ascending (u, v).
class LiveEdgePool {
 public:
  struct LiveArc {
    NodeId node;
    EdgeId edge;
  };

  LiveEdgePool(const SocialGraph& social, const TrialPool& pool, unsigned workers = 1);

  std::size_t trials() const noexcept { return offsets_.size(); }
  std::size_t num_nodes() const noexcept { return n_; }
  const TrialPool& pool() const noexcept { return pool_; }

  std::span<const LiveArc> live_out(std::size_t t, NodeId u) const {
    const auto& off = offsets_[t];
    return {arcs_[t].data() + off[u], arcs_[t].data() + off[u + 1]};
  }

  // Adapter for CascadeScratch::run.
  auto live_out_fn(std::size_t t) const {
    return [this, t](NodeId u, auto&& emit) {
      for (const auto& a : live_out(t, u)) emit(a.node, a.edge);
    };
  }

  std::size_t live_arcs() const;

 private:
  std::size_t n_;
  TrialPool pool_;
  std::vector<std::vector<std::uint32_t>> offsets_;
  std::vector<std::vector<LiveArc>> arcs_;
};

// One trial. Throws DomainError for an empty seed set or unknown seed ids.
TrialOutcome ic_trial(const SocialGraph& social, std::span<const NodeId> seeds,
                      const TrialPool& pool, std::size_t t);

struct SpreadEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t total_activated = 0;
  std::size_t trials = 0;
};

// Mean |activated| over trials 0..R-1. Integer accumulation, so the result is
// independent of `workers` and evaluation order.
SpreadEstimate estimate_spread_stats(const SocialGraph& social, std::span<const NodeId> seeds,
                                     const TrialPool& pool, unsigned workers = 1);
double estimate_spread(const SocialGraph& social, std::span<const NodeId> seeds,
                       const TrialPool& pool, unsigned workers = 1);

// Hops to deliver each successful influence from agent(u) to agent(v).
// Failed attempts and activations between nodes sharing an agent cost
// nothing. Throws InvalidLedgerError when two agents have no ad-hoc route.
std::uint64_t trial_overhead(const TrialOutcome& outcome, const AgentAssignment& assignment,
                             const DistanceOracle& oracle, const LayerMapping& mapping);

// CSV `trial,round,u,v` (labels), one row per activation.
void write_trial_log_header(std::ostream& out);
void write_trial_log(std::ostream& out, std::size_t trial, const TrialOutcome& outcome,
                     const SocialGraph& social);

// CSV `counter,value`, one row per counter plus the total.
void write_ledger(std::ostream& out, const OverheadLedger& ledger);

}  // namespace msnim

#endif  // MSNIM_DIFFUSION_HPP_
