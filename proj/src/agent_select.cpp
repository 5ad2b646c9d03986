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

#include "msnim/agent_select.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace msnim {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool less_than(double a, double b) { return a < b - 1e-9 * std::max(1.0, std::abs(b)); }

void check_sizes(const SocialGraph& social, const DistanceOracle& oracle,
                 const LayerMapping& mapping) {
  const std::size_t n = social.num_nodes();
  if (mapping.size() != n) {
    throw DomainError("mapping covers " + std::to_string(mapping.size()) + " nodes, social graph has " +
                      std::to_string(n));
  }
  if (oracle.num_nodes() != n) {
    throw DomainError("ad-hoc graph has " + std::to_string(oracle.num_nodes()) +
                      " nodes, social graph has " + std::to_string(n));
  }
}

// Costs over a vector `pos` holding the ad-hoc position of every node's agent.
class Model {
 public:
  Model(const SocialGraph& social, const DistanceOracle& oracle, const LayerMapping& mapping,
        WeightMode mode)
      : social_(social), oracle_(oracle), mapping_(mapping), mode_(mode) {
    check_sizes(social, oracle, mapping);
  }

  std::size_t size() const { return social_.num_nodes(); }
  NodeId place(NodeId v) const { return mapping_.to_adhoc(v); }
  double weight(double p) const { return mode_ == WeightMode::kUniform ? 1.0 : p; }

  std::vector<NodeId> self_positions() const {
    return {mapping_.social_to_adhoc().begin(), mapping_.social_to_adhoc().end()};
  }

  // Cost of v's incident edges if v's agent sat at `at`. Infinite when some
  // edge has no route.
  double incident(NodeId v, NodeId at, const std::vector<NodeId>& pos) const {
    const auto row = oracle_.row(at);
    double sum = 0.0;
    for (const auto& a : social_.out_edges(v)) {
      const Hops h = (*row)[pos[a.node]];
      if (h == kUnreachable) return kInf;
      sum += weight(a.p) * h;
    }
    for (const auto& a : social_.in_edges(v)) {
      const Hops h = (*row)[pos[a.node]];
      if (h == kUnreachable) return kInf;
      sum += weight(a.p) * h;
    }
    return sum;
  }

  double delta(NodeId v, NodeId proposed, const std::vector<NodeId>& pos) const {
    const NodeId to = place(proposed);
    if (to == pos[v]) return 0.0;
    const double after = incident(v, to, pos);
    if (after == kInf) return -kInf;
    return incident(v, pos[v], pos) - after;
  }

  // Full objective. `agent_of` names agents for error messages.
  double total(const std::vector<NodeId>& pos, std::span<const NodeId> agent_of) const {
    double sum = 0.0;
    for (NodeId u = 0; u < size(); ++u) {
      const auto arcs = social_.out_edges(u);
      if (arcs.empty()) continue;
      const auto row = oracle_.row(pos[u]);
      for (const auto& a : arcs) {
        const Hops h = (*row)[pos[a.node]];
        if (h == kUnreachable) throw InvalidLedgerError(agent_of[u], agent_of[a.node]);
        sum += weight(a.p) * h;
      }
    }
    return sum;
  }

  Hops hops(NodeId a, NodeId b) const { return oracle_.distance(a, b); }

 private:
  const SocialGraph& social_;
  const DistanceOracle& oracle_;
  const LayerMapping& mapping_;
  WeightMode mode_;
};

std::uint64_t finite(Hops h) { return h == kUnreachable ? 0 : h; }

// Directory notifications for a node that just got (or confirmed) its agent:
// one to its agent, one agent-to-agent message per friend.
std::uint64_t directory_hops(const SocialGraph& social, const Model& m, NodeId x,
                             const std::vector<NodeId>& pos) {
  std::uint64_t hops = finite(m.hops(m.place(x), pos[x]));
  for (NodeId y : social.friends(x)) hops += finite(m.hops(pos[x], pos[y]));
  return hops;
}

std::vector<std::vector<NodeId>> candidate_lists(const SocialGraph& social, const Model& m,
                                                 std::optional<Hops> alpha) {
  std::vector<std::vector<NodeId>> cand(social.num_nodes());
  for (NodeId v = 0; v < social.num_nodes(); ++v) {
    auto& c = cand[v];
    const auto f = social.friends(v);
    c.reserve(f.size() + 1);
    c.push_back(v);
    for (NodeId u : f) {
      if (alpha && m.hops(m.place(v), m.place(u)) > *alpha) continue;
      c.push_back(u);
    }
    std::sort(c.begin(), c.end());
  }
  return cand;
}

}  // namespace

double objective(const SocialGraph& social, const AgentAssignment& assignment,
                 const DistanceOracle& oracle, const LayerMapping& mapping,
                 WeightMode weight_mode) {
  if (assignment.size() != social.num_nodes()) {
    throw DomainError("assignment size does not match social graph");
  }
  const Model m(social, oracle, mapping, weight_mode);
  return m.total(assignment.agent_positions(mapping), assignment.agents());
}

RmoReport rmo_delta(const SocialGraph& social, const AgentAssignment& assignment, NodeId node,
                    NodeId proposed_agent, const DistanceOracle& oracle,
                    const LayerMapping& mapping, const AsmtcParams& params) {
  if (assignment.size() != social.num_nodes()) {
    throw DomainError("assignment size does not match social graph");
  }
  if (node >= social.num_nodes() || proposed_agent >= social.num_nodes()) {
    throw DomainError("node id out of range");
  }
  if (!is_candidate_agent(social, node, proposed_agent)) {
    throw DomainError("node " + std::to_string(proposed_agent) + " is not a candidate agent of " +
                      std::to_string(node));
  }
  const Model m(social, oracle, mapping, params.weight_mode);
  if (params.alpha) {
    const Hops h = m.hops(m.place(node), m.place(proposed_agent));
    if (h > *params.alpha) {
      throw DomainError("candidate " + std::to_string(proposed_agent) + " is " +
                        (h == kUnreachable ? std::string("unreachable") : std::to_string(h) + " hops") +
                        " from node " + std::to_string(node) + ", alpha is " +
                        std::to_string(*params.alpha));
    }
  }
  const auto pos = assignment.agent_positions(mapping);
  const double d = m.delta(node, proposed_agent, pos);
  if (d == -kInf) throw InvalidLedgerError(proposed_agent, kNoNode);
  return {node, proposed_agent, d};
}

DasResult das(const SocialGraph& social, const DistanceOracle& oracle, const LayerMapping& mapping,
              const AsmtcParams& params) {
  const Model m(social, oracle, mapping, params.weight_mode);
  const std::size_t n = social.num_nodes();
  const std::uint64_t broadcast = params.control.broadcast_for(n);

  std::vector<NodeId> agent(n);
  std::iota(agent.begin(), agent.end(), NodeId{0});
  std::vector<NodeId> pos = m.self_positions();
  std::vector<char> rep(n, 0);

  DasResult res;
  res.initial_objective = m.total(pos, agent);

  std::vector<double> cost(n, 0.0);
  std::vector<char> eligible(n, 0);
  std::vector<char> dirty(n, 1);
  std::size_t unrepresented = n;
  std::size_t budget = params.max_delegated.value_or(std::numeric_limits<std::size_t>::max());

  auto in_scope = [&](Hops h) { return h != kUnreachable && (!params.alpha || h <= *params.alpha); };

  // cost_v and the query traffic it takes to learn it.
  auto compute = [&](NodeId v) {
    const auto row = oracle.row(m.place(v));
    bool scope = !rep[v];
    double c = rep[v] ? 0.0 : m.delta(v, v, pos);
    std::uint64_t query = 0;
    for (NodeId u : social.friends(v)) {
      if (rep[u]) continue;
      const Hops h = (*row)[m.place(u)];
      if (!in_scope(h)) continue;
      scope = true;
      c += m.delta(u, v, pos);
      query += 2 * static_cast<std::uint64_t>(h);
    }
    cost[v] = c;
    eligible[v] = scope;
    res.ledger.control_hops += params.control.unicast_per_hop * query;
    if (scope) res.ledger.broadcast_tx += broadcast;
  };

  auto represent = [&](NodeId x) {
    rep[x] = 1;
    --unrepresented;
  };

  std::vector<NodeId> touched;
  while (unrepresented > 0) {
    if (budget == 0) {
      res.stopped_by_budget = true;
      break;
    }
    for (NodeId v = 0; v < n; ++v) {
      if (dirty[v]) {
        dirty[v] = 0;
        compute(v);
      }
    }
    NodeId w = kNoNode;
    for (NodeId v = 0; v < n; ++v) {
      if (eligible[v] && (w == kNoNode || cost[v] > cost[w])) w = v;
    }
    if (w == kNoNode || !(cost[w] > 1e-9)) {
      res.stopped_by_guard = true;
      break;
    }

    std::vector<std::pair<double, NodeId>> members;
    {
      const auto row = oracle.row(m.place(w));
      for (NodeId u : social.friends(w)) {
        if (!rep[u] && in_scope((*row)[m.place(u)])) members.push_back({m.delta(u, w, pos), u});
      }
    }
    bool truncated = false;
    if (members.size() > budget) {
      std::stable_sort(members.begin(), members.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      members.resize(budget);
      truncated = true;
    }
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });

    Election e;
    e.agent = w;
    e.estimated_reduction = cost[w];
    if (!rep[w]) {
      represent(w);
      e.represented.push_back(w);
    }
    for (const auto& [d, u] : members) {
      e.realized_reduction += m.delta(u, w, pos);
      agent[u] = w;
      pos[u] = m.place(w);
      represent(u);
      --budget;
      e.represented.push_back(u);
    }
    std::sort(e.represented.begin(), e.represented.end());
    for (NodeId x : e.represented) {
      res.ledger.control_hops += params.control.directory_per_hop * directory_hops(social, m, x, pos);
    }

    // cost_v depends on the status of v's friends u and on the agents of
    // their friends, so only the two-hop social neighbourhood of the
    // election needs recomputing.
    touched.assign(e.represented.begin(), e.represented.end());
    for (const auto& [d, u] : members) {
      for (NodeId y : social.friends(u)) touched.push_back(y);
    }
    for (NodeId x : touched) {
      dirty[x] = 1;
      for (NodeId y : social.friends(x)) dirty[y] = 1;
    }
    res.elections.push_back(std::move(e));
    if (truncated) {
      res.stopped_by_budget = true;
      break;
    }
  }

  for (NodeId x = 0; x < n; ++x) {
    if (rep[x]) continue;
    represent(x);
    res.ledger.control_hops += params.control.directory_per_hop * directory_hops(social, m, x, pos);
  }

  res.assignment = AgentAssignment::from_agents(agent);
  res.final_objective = m.total(pos, agent);
  return res;
}

MorResult mor(const SocialGraph& social, const AgentAssignment& start,
              const DistanceOracle& oracle, const LayerMapping& mapping,
              const AsmtcParams& params) {
  const Model m(social, oracle, mapping, params.weight_mode);
  const std::size_t n = social.num_nodes();
  if (start.size() != n) throw DomainError("assignment size does not match social graph");
  if (!start.all_represented()) throw DomainError("adjustment needs every node represented");
  start.check_candidates(social);
  const std::uint64_t broadcast = params.control.broadcast_for(n);
  const auto cand = candidate_lists(social, m, params.alpha);

  std::vector<NodeId> agent_c(start.agents().begin(), start.agents().end());
  std::vector<NodeId> pos_c = start.agent_positions(mapping);
  double obj_c = m.total(pos_c, agent_c);

  MorResult res;
  res.committed_objectives.push_back(obj_c);
  std::vector<std::size_t> changes(n, 0);
  const std::size_t cap = params.max_delegated.value_or(std::numeric_limits<std::size_t>::max());

  struct Change {
    NodeId v;
    NodeId from;
    NodeId to;
    bool active;
  };

  while (!(params.beta && *params.beta == 0)) {
    std::vector<NodeId> agent_t = agent_c;
    std::vector<NodeId> pos_t = pos_c;
    std::size_t delegated = 0;
    for (NodeId v = 0; v < n; ++v) delegated += agent_t[v] != v;

    auto apply = [&](NodeId v, NodeId a) {
      delegated -= agent_t[v] != v;
      agent_t[v] = a;
      pos_t[v] = m.place(a);
      delegated += a != v;
    };

    // Trying.
    std::vector<Change> tentative;
    const bool sequential = params.trying == TryingMode::kSequential;
    for (NodeId v = 0; v < n; ++v) {
      if (params.beta && changes[v] >= *params.beta) continue;
      const NodeId cur = agent_c[v];
      const auto& view = sequential ? pos_t : pos_c;
      NodeId best = cur;
      double best_delta = 0.0;
      for (NodeId u : cand[v]) {
        if (u == cur) continue;
        if (u != v && cur == v && delegated >= cap) continue;
        const double d = m.delta(v, u, view);
        if (d > best_delta + 1e-9) {
          best_delta = d;
          best = u;
        }
      }
      if (best == cur) continue;
      tentative.push_back({v, cur, best, true});
      if (sequential) {
        apply(v, best);
      } else {
        delegated += (best != v) - (cur != v);
      }
    }
    if (tentative.empty()) break;
    if (!sequential) {
      for (const auto& c : tentative) apply(c.v, c.to);
    }
    for (const auto& c : tentative) {
      res.ledger.control_hops += params.control.directory_per_hop * directory_hops(social, m, c.v, pos_t);
    }

    MorRound round;
    round.committed_before = obj_c;
    round.tried = tentative.size();

    // Checking: nodes whose own incident overhead rose announce it.
    auto check = [&] {
      std::vector<char> seen(n, 0);
      std::uint64_t worse = 0;
      for (const auto& c : tentative) {
        if (!c.active) continue;
        auto visit = [&](NodeId x) {
          if (seen[x]) return;
          seen[x] = 1;
          if (less_than(m.incident(x, pos_c[x], pos_c), m.incident(x, pos_t[x], pos_t))) ++worse;
        };
        visit(c.v);
        for (NodeId y : social.friends(c.v)) visit(y);
      }
      res.ledger.broadcast_tx += worse * broadcast;
      return m.total(pos_t, agent_t);
    };
    double obj_t = check();

    // Backward tracking: undo the change whose reversion helps most until
    // the round beats the committed assignment or nothing is left.
    std::size_t active = tentative.size();
    while (!less_than(obj_t, obj_c) && active > 0) {
      std::size_t pick = tentative.size();
      double gain = -kInf;
      for (std::size_t i = 0; i < tentative.size(); ++i) {
        if (!tentative[i].active) continue;
        const double g = m.delta(tentative[i].v, tentative[i].from, pos_t);
        if (pick == tentative.size() || g > gain) {
          pick = i;
          gain = g;
        }
      }
      auto& c = tentative[pick];
      // The friend hurt most by the change asks for it to be undone.
      NodeId asker = c.v;
      double worst = 0.0;
      for (NodeId y : social.friends(c.v)) {
        const double loss = m.incident(y, pos_t[y], pos_t) - m.incident(y, pos_c[y], pos_c);
        if (loss > worst) {
          worst = loss;
          asker = y;
        }
      }
      res.ledger.control_hops +=
          params.control.unicast_per_hop * finite(m.hops(m.place(asker), m.place(c.v)));
      apply(c.v, c.from);
      c.active = false;
      --active;
      ++round.reverted;
      obj_t = check();
    }

    if (!less_than(obj_t, obj_c)) {
      round.committed_after = obj_c;
      res.rounds.push_back(round);
      break;
    }
    for (const auto& c : tentative) {
      if (c.active) ++changes[c.v];
    }
    agent_c = std::move(agent_t);
    pos_c = std::move(pos_t);
    obj_c = obj_t;
    round.committed_after = obj_c;
    res.rounds.push_back(round);
    res.committed_objectives.push_back(obj_c);
  }

  res.assignment = AgentAssignment::from_agents(agent_c);
  return res;
}

AsmtcResult asmtc(const SocialGraph& social, const DistanceOracle& oracle,
                  const LayerMapping& mapping, const AsmtcParams& params) {
  AsmtcResult res;
  res.das = das(social, oracle, mapping, params);
  res.mor = mor(social, res.das.assignment, oracle, mapping, params);
  res.assignment = res.mor.assignment;
  res.ledger = res.das.ledger + res.mor.ledger;
  res.baseline_objective = res.das.initial_objective;
  res.objective = res.mor.committed_objectives.back();
  return res;
}

BruteForceResult brute_force_asp(const SocialGraph& social, const DistanceOracle& oracle,
                                 const LayerMapping& mapping, WeightMode weight_mode,
                                 std::uint64_t limit) {
  const Model m(social, oracle, mapping, weight_mode);
  const std::size_t n = social.num_nodes();

  long double product = 1.0L;
  std::vector<NodeId> order;  // nodes with at least one friend
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t k = social.friends(v).size() + 1;
    product *= static_cast<long double>(k);
    if (k > 1) order.push_back(v);
  }
  if (product > static_cast<long double>(limit)) {
    std::ostringstream msg;
    msg.precision(product < 1e19L ? 20 : 6);
    msg << "brute force needs " << product << " combinations, limit is " << limit;
    throw DomainError(msg.str());
  }

  // Earlier-ordered neighbours of each node with the combined weight of the
  // edges in both directions (distances are symmetric).
  std::vector<std::size_t> rank(n, n);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<std::vector<std::pair<NodeId, double>>> back(n);
  for (NodeId u = 0; u < n; ++u) {
    for (const auto& a : social.out_edges(u)) {
      const NodeId later = rank[u] > rank[a.node] ? u : a.node;
      const NodeId earlier = later == u ? a.node : u;
      auto& list = back[later];
      auto it = std::find_if(list.begin(), list.end(), [&](const auto& e) { return e.first == earlier; });
      if (it == list.end()) {
        list.push_back({earlier, m.weight(a.p)});
      } else {
        it->second += m.weight(a.p);
      }
    }
  }

  std::vector<std::vector<NodeId>> cand(n);
  std::unordered_map<NodeId, DistanceOracle::RowPtr> rows;
  for (NodeId v : order) {
    cand[v].push_back(v);
    for (NodeId u : social.friends(v)) cand[v].push_back(u);
    std::sort(cand[v].begin(), cand[v].end());
    for (NodeId c : cand[v]) {
      if (!rows.count(c)) rows.emplace(c, oracle.row(m.place(c)));
    }
  }

  std::vector<NodeId> agent(n);
  std::iota(agent.begin(), agent.end(), NodeId{0});
  std::vector<NodeId> best_agent;
  double best = kInf;

  // Depth-first in lexicographic order with pruning on partial cost >= best,
  // so the first optimum found is the lexicographically smallest.
  auto dfs = [&](auto&& self, std::size_t depth, double partial) -> void {
    if (partial >= best) return;
    if (depth == order.size()) {
      best = partial;
      best_agent = agent;
      return;
    }
    const NodeId v = order[depth];
    for (NodeId c : cand[v]) {
      agent[v] = c;
      const auto& row = *rows.at(c);
      double add = 0.0;
      bool ok = true;
      for (const auto& [u, w] : back[v]) {
        const Hops h = row[m.place(agent[u])];
        if (h == kUnreachable) {
          ok = false;
          break;
        }
        add += w * h;
      }
      if (ok) self(self, depth + 1, partial + add);
    }
    agent[v] = v;
  };
  dfs(dfs, 0, 0.0);

  if (best_agent.empty()) {
    const auto all = social.edges();
    throw InvalidLedgerError(all.front().from, all.front().to);
  }
  BruteForceResult res;
  res.assignment = AgentAssignment::from_agents(std::move(best_agent));
  res.cost = m.total(res.assignment.agent_positions(mapping), res.assignment.agents());
  res.combinations = static_cast<std::uint64_t>(product);
  return res;
}

void write_assignment(std::ostream& out, const AgentAssignment& assignment,
                      const SocialGraph& social) {
  const auto labels = social.labels();
  out << "node,agent\n";
  for (NodeId v = 0; v < assignment.size(); ++v) {
    out << labels[v] << ',' << labels[assignment.agent(v)] << '\n';
  }
}

AgentAssignment read_assignment(std::istream& in, const SocialGraph& social) {
  std::unordered_map<std::int64_t, NodeId> id;
  const auto labels = social.labels();
  for (NodeId v = 0; v < labels.size(); ++v) id.emplace(labels[v], v);

  std::vector<NodeId> agents(social.num_nodes());
  std::iota(agents.begin(), agents.end(), NodeId{0});
  std::string line;
  std::size_t line_no = 0;
  auto parse = [&](std::string_view s) {
    std::int64_t x = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
      throw ParseError(line_no, "bad label '" + std::string(s) + "'");
    }
    auto it = id.find(x);
    if (it == id.end()) throw ParseError(line_no, "unknown node " + std::string(s));
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line == "node,agent") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError(line_no, "expected node,agent");
    const std::string_view sv(line);
    agents[parse(sv.substr(0, comma))] = parse(sv.substr(comma + 1));
  }
  auto a = AgentAssignment::from_agents(std::move(agents));
  a.check_candidates(social);
  return a;
}

namespace {

template <class T>
std::optional<T> parse_limit(const std::string& key, const std::string& value) {
  if (value == "inf" || value == "none") return std::nullopt;
  T x{};
  const auto r = std::from_chars(value.data(), value.data() + value.size(), x);
  if (r.ec != std::errc() || r.ptr != value.data() + value.size()) {
    throw DomainError(key + ": expected a non-negative integer or 'inf', got '" + value + "'");
  }
  return x;
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
  auto x = parse_limit<std::uint64_t>(key, value);
  if (!x) throw DomainError(key + " must be finite");
  return *x;
}

}  // namespace

void set_asmtc_param(AsmtcParams& params, const std::string& key, const std::string& value) {
  if (key == "alpha") {
    params.alpha = parse_limit<Hops>(key, value);
  } else if (key == "beta") {
    params.beta = parse_limit<std::size_t>(key, value);
  } else if (key == "max_delegated") {
    params.max_delegated = parse_limit<std::size_t>(key, value);
  } else if (key == "weight_mode") {
    if (value == "uniform") {
      params.weight_mode = WeightMode::kUniform;
    } else if (value == "probability") {
      params.weight_mode = WeightMode::kProbability;
    } else {
      throw DomainError("weight_mode must be uniform or probability");
    }
  } else if (key == "trying") {
    if (value == "sequential") {
      params.trying = TryingMode::kSequential;
    } else if (value == "simultaneous") {
      params.trying = TryingMode::kSimultaneous;
    } else {
      throw DomainError("trying must be sequential or simultaneous");
    }
  } else if (key == "unicast_per_hop") {
    params.control.unicast_per_hop = parse_count(key, value);
  } else if (key == "broadcast_cost") {
    params.control.broadcast_cost =
        value == "auto" ? std::nullopt : std::optional(parse_count(key, value));
  } else if (key == "directory_per_hop") {
    params.control.directory_per_hop = parse_count(key, value);
  } else {
    throw DomainError("unknown agent-selection parameter '" + key + "'");
  }
}

void apply_asmtc_params(AsmtcParams& params, const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) set_asmtc_param(params, k, v);
}

}  // namespace msnim
