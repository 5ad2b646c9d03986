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

#include "msnim/diffusion.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "msnim/parallel.hpp"

namespace msnim {
namespace {

std::vector<NodeId> canonical_seeds(const SocialGraph& social, std::span<const NodeId> seeds) {
  if (seeds.empty()) throw DomainError("seed set is empty");
  std::vector<NodeId> s(seeds.begin(), seeds.end());
  for (NodeId v : s) {
    if (v >= social.num_nodes()) throw DomainError("unknown seed id " + std::to_string(v));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

auto hashed_live_out(const SocialGraph& social, const TrialPool& pool, std::size_t t) {
  return [&social, &pool, t](NodeId u, auto&& emit) {
    const EdgeId first = social.first_out(u);
    const auto arcs = social.out_edges(u);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (coin(pool.base_seed, t, u, arcs[i].node) < arcs[i].p) {
        emit(arcs[i].node, static_cast<EdgeId>(first + i));
      }
    }
  };
}

}  // namespace

LiveEdgePool::LiveEdgePool(const SocialGraph& social, const TrialPool& pool, unsigned workers)
    : n_(social.num_nodes()), pool_(pool), offsets_(pool.trials), arcs_(pool.trials) {
  parallel_for(pool.trials, workers, [&](std::size_t t, unsigned) {
    auto& off = offsets_[t];
    auto& arcs = arcs_[t];
    off.assign(n_ + 1, 0);
    for (NodeId u = 0; u < n_; ++u) {
      const EdgeId first = social.first_out(u);
      const auto out = social.out_edges(u);
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (coin(pool.base_seed, t, u, out[i].node) < out[i].p) {
          arcs.push_back({out[i].node, static_cast<EdgeId>(first + i)});
        }
      }
      off[u + 1] = static_cast<std::uint32_t>(arcs.size());
    }
    arcs.shrink_to_fit();
  });
}

std::size_t LiveEdgePool::live_arcs() const {
  std::size_t total = 0;
  for (const auto& a : arcs_) total += a.size();
  return total;
}

TrialOutcome ic_trial(const SocialGraph& social, std::span<const NodeId> seeds,
                      const TrialPool& pool, std::size_t t) {
  const auto s = canonical_seeds(social, seeds);
  CascadeScratch scratch(social.num_nodes());
  TrialOutcome out;
  scratch.run(s, hashed_live_out(social, pool, t), [&](NodeId u, NodeId v, std::uint32_t r, EdgeId e) {
    out.activations.push_back({u, v, r, e});
  });
  out.activated.assign(scratch.activated().begin(), scratch.activated().end());
  return out;
}

SpreadEstimate estimate_spread_stats(const SocialGraph& social, std::span<const NodeId> seeds,
                                     const TrialPool& pool, unsigned workers) {
  if (pool.trials == 0) throw DomainError("trial pool is empty");
  const auto s = canonical_seeds(social, seeds);
  std::vector<std::uint64_t> sizes(pool.trials);
  std::vector<CascadeScratch> scratch(std::max(1u, workers), CascadeScratch(social.num_nodes()));
  parallel_for(pool.trials, workers, [&](std::size_t t, unsigned w) {
    sizes[t] = scratch[w].run(s, hashed_live_out(social, pool, t), [](auto...) {});
  });
  SpreadEstimate est;
  est.trials = pool.trials;
  std::uint64_t sq = 0;
  for (auto x : sizes) {
    est.total_activated += x;
    sq += x * x;
  }
  const double r = static_cast<double>(pool.trials);
  est.mean = static_cast<double>(est.total_activated) / r;
  if (pool.trials > 1) {
    const double var = (static_cast<double>(sq) - r * est.mean * est.mean) / (r - 1.0);
    est.std_error = std::sqrt(std::max(0.0, var) / r);
  }
  return est;
}

double estimate_spread(const SocialGraph& social, std::span<const NodeId> seeds,
                       const TrialPool& pool, unsigned workers) {
  return estimate_spread_stats(social, seeds, pool, workers).mean;
}

std::uint64_t trial_overhead(const TrialOutcome& outcome, const AgentAssignment& assignment,
                             const DistanceOracle& oracle, const LayerMapping& mapping) {
  std::uint64_t hops = 0;
  for (const auto& a : outcome.activations) {
    const NodeId from = assignment.agent(a.u);
    const NodeId to = assignment.agent(a.v);
    if (from == to) continue;
    const Hops d = oracle.distance(mapping.to_adhoc(from), mapping.to_adhoc(to));
    if (d == kUnreachable) throw InvalidLedgerError(from, to);
    hops += d;
  }
  return hops;
}

void write_trial_log_header(std::ostream& out) { out << "trial,round,u,v\n"; }

void write_trial_log(std::ostream& out, std::size_t trial, const TrialOutcome& outcome,
                     const SocialGraph& social) {
  const auto labels = social.labels();
  for (const auto& a : outcome.activations) {
    out << trial << ',' << a.round << ',' << labels[a.u] << ',' << labels[a.v] << '\n';
  }
}

void write_ledger(std::ostream& out, const OverheadLedger& ledger) {
  out << "counter,value\n"
      << "influence_hops," << ledger.influence_hops << '\n'
      << "return_hops," << ledger.return_hops << '\n'
      << "broadcast_tx," << ledger.broadcast_tx << '\n'
      << "control_hops," << ledger.control_hops << '\n'
      << "total," << ledger.total() << '\n';
}

}  // namespace msnim
