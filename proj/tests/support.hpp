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

// Shared fixtures and reference implementations for the tests. The
// reference code here is deliberately naive and shares no logic with the
// library beyond the graph containers and the coin function.

#ifndef MSNIM_TESTS_SUPPORT_HPP_
#define MSNIM_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "msnim/adhoc_graph.hpp"
#include "msnim/agent_select.hpp"
#include "msnim/layer_mapping.hpp"
#include "msnim/rng.hpp"
#include "msnim/social_graph.hpp"

namespace testing {

using msnim::AdhocGraph;
using msnim::Hops;
using msnim::LayerMapping;
using msnim::NodeId;
using msnim::SocialEdge;
using msnim::SocialGraph;

constexpr Hops kInf = std::numeric_limits<Hops>::max();

// ---------------------------------------------------------------------------
// The 8-node example network. Labels 1..8 map to ids 0..7.

inline NodeId id(int label) { return static_cast<NodeId>(label - 1); }

// Friendships, each in both directions.
inline const std::vector<std::pair<int, int>>& example_friendships() {
  static const std::vector<std::pair<int, int>> f{{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 4},
                                                  {2, 6}, {3, 4}, {3, 8}, {4, 6}, {4, 7}};
  return f;
}

// p(u, v) for every directed friendship.
inline SocialGraph example_social(const std::function<double(int, int)>& p) {
  std::vector<SocialEdge> edges;
  for (auto [a, b] : example_friendships()) {
    edges.push_back({id(a), id(b), p(a, b)});
    edges.push_back({id(b), id(a), p(b, a)});
  }
  auto g = SocialGraph::from_edges(8, edges);
  g.set_labels({1, 2, 3, 4, 5, 6, 7, 8});
  return g;
}

inline SocialGraph example_social(double p) {
  return example_social([p](int, int) { return p; });
}

// Node 4 activates 2, 3 and 6; nothing else fires.
inline SocialGraph example_forced() {
  return example_social([](int u, int v) { return u == 4 && (v == 2 || v == 3 || v == 6) ? 1.0 : 0.0; });
}

inline AdhocGraph example_adhoc() {
  const std::vector<std::pair<int, int>> links{{4, 5}, {5, 6}, {6, 3}, {5, 1}, {1, 7}, {7, 2}, {3, 8}};
  std::vector<std::pair<NodeId, NodeId>> l;
  for (auto [a, b] : links) l.push_back({id(a), id(b)});
  auto g = AdhocGraph::from_links(8, l);
  g.set_labels({1, 2, 3, 4, 5, 6, 7, 8});
  return g;
}

// Node 4 represents 2, 4, 6; node 1 represents 1, 3, 5; 7 and 8 represent
// themselves.
inline std::vector<NodeId> example_agents() {
  return {id(1), id(4), id(1), id(4), id(1), id(4), id(7), id(8)};
}

// ---------------------------------------------------------------------------
// Random instances.

struct Instance {
  SocialGraph social;
  AdhocGraph adhoc;
  LayerMapping mapping;
};

inline SocialGraph random_social(std::size_t n, double density, std::mt19937_64& rng,
                                 bool symmetric = false) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<SocialEdge> edges;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (u01(rng) >= density) continue;
      const double r = u01(rng);
      const double pa = std::round(u01(rng) * 100) / 100;
      const double pb = std::round(u01(rng) * 100) / 100;
      if (symmetric || r < 0.6) {
        edges.push_back({a, b, pa});
        edges.push_back({b, a, pb});
      } else if (r < 0.8) {
        edges.push_back({a, b, pa});
      } else {
        edges.push_back({b, a, pb});
      }
    }
  }
  return SocialGraph::from_edges(n, edges);
}

// Random spanning tree plus `extra` random links; connected.
inline AdhocGraph random_connected_adhoc(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  std::vector<std::pair<NodeId, NodeId>> links;
  for (NodeId v = 1; v < n; ++v) {
    links.push_back({static_cast<NodeId>(std::uniform_int_distribution<NodeId>(0, v - 1)(rng)), v});
  }
  if (n >= 2) {
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    for (std::size_t i = 0; i < extra; ++i) {
      const NodeId a = pick(rng), b = pick(rng);
      if (a != b) links.push_back({a, b});
    }
  }
  return AdhocGraph::from_links(n, links);
}

// Any graph, possibly disconnected.
inline AdhocGraph random_adhoc(std::size_t n, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<std::pair<NodeId, NodeId>> links;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (u01(rng) < density) links.push_back({a, b});
    }
  }
  return AdhocGraph::from_links(n, links);
}

inline LayerMapping random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)]);
  }
  return LayerMapping::from_permutation(perm);
}

inline Instance random_instance(std::size_t n, double density, std::size_t extra_links,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.social = random_social(n, density, rng);
  inst.adhoc = random_connected_adhoc(n, extra_links, rng);
  inst.mapping = random_permutation(n, rng);
  return inst;
}

// ---------------------------------------------------------------------------
// Reference implementations.

using Matrix = std::vector<std::vector<Hops>>;

inline Matrix floyd_warshall(const AdhocGraph& g) {
  const std::size_t n = g.num_nodes();
  Matrix d(n, std::vector<Hops>(n, kInf));
  for (NodeId v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (NodeId u : g.neighbors(v)) d[v][u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] == kInf) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

// Distance between the ad-hoc positions of two social nodes.
inline Hops social_hops(const Matrix& d, const LayerMapping& m, NodeId a, NodeId b) {
  return d[m.to_adhoc(a)][m.to_adhoc(b)];
}

// Exact expected spread: sum over every live-edge subset of its probability
// times the number of nodes reachable from the seeds.
inline double exact_spread(const SocialGraph& g, const std::vector<NodeId>& seeds) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t n = g.num_nodes();
  double expectation = 0.0;
  std::vector<char> seen(n);
  std::vector<NodeId> stack;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double prob = 1.0;
    for (std::size_t i = 0; i < m && prob > 0.0; ++i) {
      prob *= (mask >> i & 1) ? edges[i].p : 1.0 - edges[i].p;
    }
    if (prob == 0.0) continue;
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    for (NodeId s : seeds) {
      if (!seen[s]) {
        seen[s] = 1;
        stack.push_back(s);
      }
    }
    std::size_t reached = stack.size();
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i & 1) && edges[i].from == u && !seen[edges[i].to]) {
          seen[edges[i].to] = 1;
          ++reached;
          stack.push_back(edges[i].to);
        }
      }
    }
    expectation += prob * static_cast<double>(reached);
  }
  return expectation;
}

struct Step {
  NodeId u;
  NodeId v;
};

// One cascade by rounds: the frontier is scanned in ascending order and each
// node's live out-arcs in ascending target order.
inline std::vector<Step> naive_cascade(const SocialGraph& g, std::vector<NodeId> seeds,
                                       std::uint64_t base_seed, std::size_t trial,
                                       std::vector<NodeId>* activated = nullptr) {
  std::vector<char> active(g.num_nodes(), 0);
  std::vector<NodeId> frontier;
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  for (NodeId s : seeds) {
    active[s] = 1;
    frontier.push_back(s);
  }
  if (activated) *activated = seeds;
  std::vector<Step> steps;
  while (!frontier.empty()) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      std::vector<std::pair<NodeId, double>> out;
      for (const auto& a : g.out_edges(u)) out.push_back({a.node, a.p});
      std::sort(out.begin(), out.end());
      for (auto [v, p] : out) {
        if (active[v]) continue;
        if (msnim::coin(base_seed, trial, u, v) < p) {
          active[v] = 1;
          next.push_back(v);
          steps.push_back({u, v});
          if (activated) activated->push_back(v);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = next;
  }
  return steps;
}

// Sum over social edges of w * d(agent(u), agent(v)) by a double loop.
inline double naive_objective(const SocialGraph& g, const std::vector<NodeId>& agent,
                              const Matrix& d, const LayerMapping& m,
                              msnim::WeightMode mode = msnim::WeightMode::kUniform) {
  double sum = 0.0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      for (const auto& a : g.out_edges(u)) {
        if (a.node != v) continue;
        const Hops h = social_hops(d, m, agent[u], agent[v]);
        if (h == kInf) return std::numeric_limits<double>::infinity();
        sum += (mode == msnim::WeightMode::kUniform ? 1.0 : a.p) * h;
      }
    }
  }
  return sum;
}

// Every candidate assignment, recursively; keeps the first minimum found in
// lexicographic order.
inline std::pair<std::vector<NodeId>, double> recursive_asp(
    const SocialGraph& g, const Matrix& d, const LayerMapping& m,
    msnim::WeightMode mode = msnim::WeightMode::kUniform) {
  const std::size_t n = g.num_nodes();
  std::vector<NodeId> agent(n), best;
  double best_cost = std::numeric_limits<double>::infinity();
  std::function<void(NodeId)> rec = [&](NodeId v) {
    if (v == n) {
      const double c = naive_objective(g, agent, d, m, mode);
      if (c < best_cost) {
        best_cost = c;
        best = agent;
      }
      return;
    }
    std::vector<NodeId> cand{v};
    for (NodeId u : g.friends(v)) cand.push_back(u);
    std::sort(cand.begin(), cand.end());
    for (NodeId c : cand) {
      agent[v] = c;
      rec(v + 1);
    }
  };
  rec(0);
  return {best, best_cost};
}

}  // namespace testing

#endif  // MSNIM_TESTS_SUPPORT_HPP_
