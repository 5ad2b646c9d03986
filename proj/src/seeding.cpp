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

#include "msnim/seeding.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <string>

#include "msnim/edge_list.hpp"
#include "msnim/parallel.hpp"

namespace msnim {
namespace {

std::vector<NodeId> candidate_universe(const SocialGraph& social, const SeedingOptions& options) {
  std::vector<NodeId> nodes(social.num_nodes());
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  if (options.candidate_cap && *options.candidate_cap < nodes.size()) {
    std::stable_sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
      return social.out_degree(a) > social.out_degree(b);
    });
    nodes.resize(*options.candidate_cap);
    std::sort(nodes.begin(), nodes.end());
  }
  return nodes;
}

// Spread evaluator over one shared pool. Keeps, per trial, the nodes covered
// by the committed seeds; the gain of w is the number of nodes w reaches
// outside that cover, summed over trials. Scores are exact integers.
class SharedCoverage {
 public:
  struct Scratch {
    explicit Scratch(std::size_t n) : stamp(n, 0) {}
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
    std::vector<NodeId> stack;
  };

  explicit SharedCoverage(const LiveEdgePool& live)
      : live_(live), n_(live.num_nodes()), covered_(live.trials() * live.num_nodes(), 0) {}

  std::size_t trials() const { return live_.trials(); }

  double score(NodeId w, std::size_t /*iteration*/, Scratch& s) const {
    std::uint64_t total = 0;
    for (std::size_t t = 0; t < live_.trials(); ++t) total += reach(t, w, s, nullptr);
    return static_cast<double>(total);
  }

  double to_gain(double score) const { return score / static_cast<double>(live_.trials()); }

  void commit(NodeId w, Scratch& s) {
    for (std::size_t t = 0; t < live_.trials(); ++t) reach(t, w, s, covered_.data() + t * n_);
  }

 private:
  // Nodes reachable from w in trial t that are not yet covered. With `mark`
  // set, those nodes become covered.
  std::uint64_t reach(std::size_t t, NodeId w, Scratch& s, std::uint8_t* mark) const {
    const std::uint8_t* cov = covered_.data() + t * n_;
    if (cov[w]) return 0;
    if (++s.epoch == 0) {
      std::fill(s.stamp.begin(), s.stamp.end(), 0);
      s.epoch = 1;
    }
    std::uint64_t count = 0;
    s.stack.clear();
    s.stack.push_back(w);
    s.stamp[w] = s.epoch;
    while (!s.stack.empty()) {
      const NodeId u = s.stack.back();
      s.stack.pop_back();
      ++count;
      if (mark) mark[u] = 1;
      for (const auto& a : live_.live_out(t, u)) {
        if (s.stamp[a.node] != s.epoch && !cov[a.node]) {
          s.stamp[a.node] = s.epoch;
          s.stack.push_back(a.node);
        }
      }
    }
    return count;
  }

  const LiveEdgePool& live_;
  std::size_t n_;
  std::vector<std::uint8_t> covered_;
};

// Evaluator drawing a fresh pool for each (iteration, candidate) pair.
class IndependentSampler {
 public:
  struct Scratch {
    explicit Scratch(std::size_t) {}
  };

  IndependentSampler(const SocialGraph& social, const TrialPool& pool)
      : social_(social), pool_(pool) {}

  double score(NodeId w, std::size_t iteration, Scratch&) const {
    std::vector<NodeId> s = seeds_;
    s.push_back(w);
    return estimate_spread(social_, s, pool_for(iteration, w)) - base_;
  }

  double to_gain(double score) const { return score; }

  void commit(NodeId w, Scratch&) {
    seeds_.push_back(w);
    base_ = estimate_spread(social_, seeds_, pool_for(seeds_.size(), kNoNode));
  }

 private:
  TrialPool pool_for(std::size_t iteration, NodeId w) const {
    return {hash_combine(hash_combine(pool_.base_seed, iteration + 1), w), pool_.trials};
  }

  const SocialGraph& social_;
  TrialPool pool_;
  std::vector<NodeId> seeds_;
  double base_ = 0.0;
};

void check_budget(std::size_t k, std::size_t candidates) {
  if (k == 0) throw DomainError("seed budget K must be at least 1");
  if (k > candidates) {
    throw DomainError("seed budget K=" + std::to_string(k) + " exceeds " +
                      std::to_string(candidates) + " candidates");
  }
}

template <class Evaluator>
SeedSelection run_greedy(Evaluator& eval, std::size_t n, std::size_t k,
                         std::vector<NodeId> candidates, const SeedingOptions& options) {
  check_budget(k, candidates.size());
  SeedSelection sel;
  sel.candidates = candidates;
  sel.candidate_cap = options.candidate_cap;
  const unsigned workers = std::max(1u, options.workers);
  std::vector<typename Evaluator::Scratch> scratch(workers, typename Evaluator::Scratch(n));
  std::vector<char> chosen(n, 0);
  std::vector<double> scores(candidates.size());

  for (std::size_t iter = 0; iter < k; ++iter) {
    parallel_for(candidates.size(), workers, [&](std::size_t j, unsigned w) {
      if (!chosen[candidates[j]]) scores[j] = eval.score(candidates[j], iter, scratch[w]);
    });
    std::size_t best = candidates.size();
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (chosen[candidates[j]]) continue;
      ++sel.lookups;
      if (best == candidates.size() || scores[j] > scores[best]) best = j;
    }
    const NodeId pick = candidates[best];
    chosen[pick] = 1;
    eval.commit(pick, scratch[0]);
    sel.seeds.push_back(pick);
    sel.marginal_gains.push_back(eval.to_gain(scores[best]));
    sel.lookups_at_pick.push_back(sel.lookups);
  }
  return sel;
}

// Lazy greedy. Heap order is (score desc, id asc), the same order greedy
// uses to break ties, so a fresh entry on top is greedy's pick.
template <class Evaluator>
SeedSelection run_celf(Evaluator& eval, std::size_t n, std::size_t k,
                       std::vector<NodeId> candidates, const SeedingOptions& options) {
  check_budget(k, candidates.size());
  SeedSelection sel;
  sel.candidates = candidates;
  sel.candidate_cap = options.candidate_cap;
  const unsigned workers = std::max(1u, options.workers);
  std::vector<typename Evaluator::Scratch> scratch(workers, typename Evaluator::Scratch(n));

  struct Entry {
    double score;
    NodeId node;
    std::size_t fresh_at;  // iteration in which score was computed
  };
  auto lower = [](const Entry& a, const Entry& b) {
    return a.score != b.score ? a.score < b.score : a.node > b.node;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);

  std::vector<double> initial(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t j, unsigned w) {
    initial[j] = eval.score(candidates[j], 0, scratch[w]);
  });
  sel.lookups = candidates.size();
  for (std::size_t j = 0; j < candidates.size(); ++j) heap.push({initial[j], candidates[j], 0});

  for (std::size_t iter = 0; iter < k; ++iter) {
    while (true) {
      Entry top = heap.top();
      heap.pop();
      if (top.fresh_at == iter) {
        eval.commit(top.node, scratch[0]);
        sel.seeds.push_back(top.node);
        sel.marginal_gains.push_back(eval.to_gain(top.score));
        sel.lookups_at_pick.push_back(sel.lookups);
        break;
      }
      top.score = eval.score(top.node, iter, scratch[0]);
      top.fresh_at = iter;
      ++sel.lookups;
      heap.push(top);
    }
  }
  return sel;
}

}  // namespace

double SeedSelection::spread() const {
  return std::accumulate(marginal_gains.begin(), marginal_gains.end(), 0.0);
}

SeedSelection greedy_select(const SocialGraph& social, std::size_t k, const LiveEdgePool& live,
                            const SeedingOptions& options) {
  SharedCoverage eval(live);
  return run_greedy(eval, social.num_nodes(), k, candidate_universe(social, options), options);
}

SeedSelection celf_select(const SocialGraph& social, std::size_t k, const LiveEdgePool& live,
                          const SeedingOptions& options) {
  SharedCoverage eval(live);
  return run_celf(eval, social.num_nodes(), k, candidate_universe(social, options), options);
}

SeedSelection greedy_select(const SocialGraph& social, std::size_t k, const TrialPool& pool,
                            const SeedingOptions& options) {
  check_budget(k, candidate_universe(social, options).size());
  if (options.pool_mode == PoolMode::kIndependent) {
    IndependentSampler eval(social, pool);
    return run_greedy(eval, social.num_nodes(), k, candidate_universe(social, options), options);
  }
  LiveEdgePool live(social, pool, options.workers);
  return greedy_select(social, k, live, options);
}

SeedSelection celf_select(const SocialGraph& social, std::size_t k, const TrialPool& pool,
                          const SeedingOptions& options) {
  check_budget(k, candidate_universe(social, options).size());
  if (options.pool_mode == PoolMode::kIndependent) {
    IndependentSampler eval(social, pool);
    return run_celf(eval, social.num_nodes(), k, candidate_universe(social, options), options);
  }
  LiveEdgePool live(social, pool, options.workers);
  return celf_select(social, k, live, options);
}

SeedSelection select_seeds(SeedAlgorithm algorithm, const SocialGraph& social, std::size_t k,
                           const TrialPool& pool, const SeedingOptions& options) {
  return algorithm == SeedAlgorithm::kGreedy ? greedy_select(social, k, pool, options)
                                             : celf_select(social, k, pool, options);
}

void write_selection(std::ostream& out, const SeedSelection& selection, const SocialGraph& social) {
  out << "rank,node,marginal_gain,lookups_so_far\n";
  for (std::size_t i = 0; i < selection.seeds.size(); ++i) {
    out << (i + 1) << ',' << social.labels()[selection.seeds[i]] << ','
        << format_double(selection.marginal_gains[i]) << ',' << selection.lookups_at_pick[i] << '\n';
  }
}

DeploymentReport deployment_overhead(const SocialGraph& social, const SeedSelection& selection,
                                     const AgentAssignment& assignment,
                                     const DistanceOracle& oracle, const LayerMapping& mapping,
                                     const LiveEdgePool& live, const DeploymentCostModel& model,
                                     const DeploymentOptions& options) {
  const std::size_t n = social.num_nodes();
  if (assignment.size() != n || mapping.size() != n || oracle.num_nodes() != n) {
    throw DomainError("layer, mapping and assignment sizes differ");
  }
  const auto pos = assignment.agent_positions(mapping);

  // Agent-to-agent cost of each social edge; kUnreachable is only an error
  // if a live activation uses it.
  std::vector<Hops> edge_cost(social.num_edges(), 0);
  for (NodeId u = 0; u < n; ++u) {
    const auto row = oracle.row(pos[u]);
    const EdgeId first = social.first_out(u);
    const auto arcs = social.out_edges(u);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      edge_cost[first + i] = (*row)[pos[arcs[i].node]];
    }
  }

  const std::vector<NodeId>& universe = options.candidates ? *options.candidates : selection.candidates;
  const std::uint64_t broadcast = model.broadcast_for(n);
  const unsigned workers = std::max(1u, options.workers);
  std::vector<CascadeScratch> scratch(workers, CascadeScratch(n));

  DeploymentReport report;
  std::vector<NodeId> prefix;
  for (std::size_t iter = 0; iter < selection.seeds.size(); ++iter) {
    std::vector<NodeId> candidates;
    for (NodeId w : universe) {
      if (std::find(prefix.begin(), prefix.end(), w) == prefix.end()) candidates.push_back(w);
    }
    std::vector<OverheadLedger> per_candidate(candidates.size());
    parallel_for(candidates.size(), workers, [&](std::size_t j, unsigned wk) {
      const NodeId w = candidates[j];
      auto& ledger = per_candidate[j];
      DistanceOracle::RowPtr back;
      if (model.returns == ReturnRoute::kAgentToAgent) back = oracle.row(pos[w]);
      if (model.returns == ReturnRoute::kNodeToNode) back = oracle.row(mapping.to_adhoc(w));
      std::vector<NodeId> seeds = prefix;
      seeds.push_back(w);
      auto& sc = scratch[wk];
      for (std::size_t t = 0; t < live.trials(); ++t) {
        sc.run(seeds, live.live_out_fn(t), [&](NodeId u, NodeId v, std::uint32_t, EdgeId e) {
          const Hops d = edge_cost[e];
          if (d == kUnreachable) throw InvalidLedgerError(assignment.agent(u), assignment.agent(v));
          ledger.influence_hops += d;
        });
        if (!back) continue;
        for (NodeId x : sc.activated()) {
          if (x == w) continue;
          const NodeId from = model.returns == ReturnRoute::kAgentToAgent ? pos[x] : mapping.to_adhoc(x);
          const Hops d = (*back)[from];
          if (d == kUnreachable) {
            throw model.returns == ReturnRoute::kAgentToAgent
                ? InvalidLedgerError(assignment.agent(x), assignment.agent(w))
                : InvalidLedgerError(x, w);
          }
          ledger.return_hops += d;
        }
      }
      ledger.broadcast_tx += broadcast;
    });
    OverheadLedger iteration;
    for (const auto& l : per_candidate) iteration += l;
    report.per_iteration.push_back(iteration);
    report.total += iteration;
    report.evaluations += candidates.size();
    prefix.push_back(selection.seeds[iter]);
  }
  return report;
}

DeploymentReport deployment_overhead(const SocialGraph& social, const SeedSelection& selection,
                                     const AgentAssignment& assignment,
                                     const DistanceOracle& oracle, const LayerMapping& mapping,
                                     const TrialPool& pool, const DeploymentCostModel& model,
                                     const DeploymentOptions& options) {
  LiveEdgePool live(social, pool, options.workers);
  return deployment_overhead(social, selection, assignment, oracle, mapping, live, model, options);
}

}  // namespace msnim
