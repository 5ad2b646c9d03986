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

#include <sstream>

#include "doctest.h"
#include "msnim/agent_select.hpp"
#include "msnim/netgen.hpp"
#include "support.hpp"

using namespace msnim;
using testing::id;

namespace {

std::vector<NodeId> agents_of(const AgentAssignment& a) { return {a.agents().begin(), a.agents().end()}; }

// Hub 0 with friends 1..4 on the path 5-1-0-2-3-4; node 5 has no friends.
struct Hub {
  SocialGraph social;
  AdhocGraph adhoc = AdhocGraph::from_links(
      6, std::vector<AdhocGraph::Link>{{5, 1}, {1, 0}, {0, 2}, {2, 3}, {3, 4}});
  Hub() {
    std::vector<SocialEdge> e;
    for (NodeId v = 1; v <= 4; ++v) {
      e.push_back({0, v, 1.0});
      e.push_back({v, 0, 1.0});
    }
    social = SocialGraph::from_edges(6, e);
  }
};

testing::Instance medium(std::size_t n, std::uint64_t seed) {
  testing::Instance inst;
  inst.social = assign_probabilities(
      generate_social({.n = n, .avg_degree = 10, .max_degree = 50, .rng_seed = seed}),
      ProbabilityModel::constant(0.05));
  inst.adhoc = generate_manet({.n = n, .avg_degree = 10, .max_degree = 15, .rng_seed = seed + 100}).graph;
  inst.mapping = random_mapping(n, seed + 200);
  return inst;
}

void check_mor_trace(const MorResult& m) {
  for (std::size_t i = 1; i < m.committed_objectives.size(); ++i) {
    REQUIRE(m.committed_objectives[i] < m.committed_objectives[i - 1]);
  }
}

}  // namespace

TEST_CASE("objective with all-self agents on adjacent nodes counts one hop per edge") {
  std::mt19937_64 rng(1);
  const std::size_t n = 12;
  const auto g = testing::random_social(n, 0.4, rng);
  std::vector<AdhocGraph::Link> links;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) links.push_back({u, v});
  }
  const auto adhoc = AdhocGraph::from_links(n, links);
  const DistanceOracle oracle(adhoc);
  const auto self = AgentAssignment::all_self(n);
  CHECK(objective(g, self, oracle, LayerMapping::identity(n)) == static_cast<double>(g.num_edges()));
}

TEST_CASE("objective matches a naive recount") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = testing::random_instance(30, 0.15, 10, seed);
    const DistanceOracle oracle(inst.adhoc);
    const auto fw = testing::floyd_warshall(inst.adhoc);
    const auto a = asmtc(inst.social, oracle, inst.mapping).assignment;
    for (auto mode : {WeightMode::kUniform, WeightMode::kProbability}) {
      CHECK(objective(inst.social, a, oracle, inst.mapping, mode) ==
            doctest::Approx(testing::naive_objective(inst.social, agents_of(a), fw, inst.mapping, mode)));
    }
  }
}

TEST_CASE("objective across disconnected agents is invalid") {
  const auto g = testing::example_social(0.5);
  const auto adhoc = AdhocGraph::from_links(8, std::vector<AdhocGraph::Link>{});
  const DistanceOracle oracle(adhoc);
  CHECK_THROWS_AS(objective(g, AgentAssignment::all_self(8), oracle, LayerMapping::identity(8)),
                  InvalidLedgerError);
}

TEST_CASE("rmo_delta equals the objective difference") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto inst = testing::random_instance(25, 0.2, 15, seed);
    const DistanceOracle oracle(inst.adhoc);
    std::mt19937_64 rng(seed);
    auto a = AgentAssignment::all_self(25);
    for (int step = 0; step < 100; ++step) {
      const NodeId v = static_cast<NodeId>(rng() % 25);
      const auto fr = inst.social.friends(v);
      const NodeId c = fr.empty() || rng() % 4 == 0 ? v : fr[rng() % fr.size()];
      for (auto mode : {WeightMode::kUniform, WeightMode::kProbability}) {
        AsmtcParams p;
        p.weight_mode = mode;
        const double before = objective(inst.social, a, oracle, inst.mapping, mode);
        auto b = a;
        b.set_agent(v, c);
        const double after = objective(inst.social, b, oracle, inst.mapping, mode);
        const auto r = rmo_delta(inst.social, a, v, c, oracle, inst.mapping, p);
        REQUIRE(r.delta == doctest::Approx(before - after));
        CHECK(r.node == v);
        CHECK(r.proposed_agent == c);
      }
      a.set_agent(v, c);
      CHECK(rmo_delta(inst.social, a, v, c, oracle, inst.mapping).delta == 0.0);
    }
  }
}

TEST_CASE("rmo_delta rejects non-candidates and out-of-range agents") {
  Hub h;
  const DistanceOracle oracle(h.adhoc);
  const auto self = AgentAssignment::all_self(6);
  const auto map = LayerMapping::identity(6);
  CHECK_THROWS_AS(rmo_delta(h.social, self, 1, 2, oracle, map), DomainError);
  AsmtcParams p;
  p.alpha = 1;
  CHECK_NOTHROW(rmo_delta(h.social, self, 1, 0, oracle, map, p));
  CHECK_THROWS_AS(rmo_delta(h.social, self, 4, 0, oracle, map, p), DomainError);
}

TEST_CASE("DAS elects the hub") {
  Hub h;
  const DistanceOracle oracle(h.adhoc);
  const auto r = das(h.social, oracle, LayerMapping::identity(6));
  CHECK(r.initial_objective == 14.0);
  CHECK(r.final_objective == 0.0);
  REQUIRE(r.elections.size() == 1);
  CHECK(r.elections[0].agent == 0);
  CHECK(r.elections[0].estimated_reduction == 14.0);
  CHECK(r.elections[0].realized_reduction == 14.0);
  CHECK(r.elections[0].represented == std::vector<NodeId>{0, 1, 2, 3, 4});
  CHECK(agents_of(r.assignment) == std::vector<NodeId>{0, 0, 0, 0, 0, 5});
  CHECK(r.stopped_by_guard);
  CHECK_FALSE(r.stopped_by_budget);
  CHECK(r.ledger.influence_hops == 0);
  CHECK(r.ledger.return_hops == 0);
}

TEST_CASE("DAS respects the delegation budget") {
  Hub h;
  const DistanceOracle oracle(h.adhoc);
  AsmtcParams p;
  p.max_delegated = 2;
  const auto r = das(h.social, oracle, LayerMapping::identity(6), p);
  CHECK(r.stopped_by_budget);
  CHECK(r.assignment.delegated_count() == 2);
  // Friends 4 and 3 are the farthest and save the most.
  CHECK(agents_of(r.assignment) == std::vector<NodeId>{0, 1, 2, 0, 0, 5});
  CHECK(r.final_objective == 4.0);

  p.max_delegated = 0;
  const auto zero = das(h.social, oracle, LayerMapping::identity(6), p);
  CHECK(zero.assignment == AgentAssignment::all_self(6));
  CHECK(zero.elections.empty());
  CHECK(zero.ledger.broadcast_tx == 0);
}

TEST_CASE("all-adjacent instance ends no worse than one hop per edge") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 15;
    const auto g = testing::random_social(n, 0.3, rng);
    std::vector<AdhocGraph::Link> links;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) links.push_back({u, v});
    }
    const auto adhoc = AdhocGraph::from_links(n, links);
    const DistanceOracle oracle(adhoc);
    const auto r = asmtc(g, oracle, LayerMapping::identity(n));
    CHECK(r.das.final_objective <= static_cast<double>(g.num_edges()));
    CHECK(r.objective <= r.das.final_objective);
  }
}

TEST_CASE("delegation cap holds through both phases") {
  const auto inst = medium(400, 3);
  const DistanceOracle oracle(inst.adhoc);
  for (std::size_t cap : {0, 1, 10, 50, 100}) {
    AsmtcParams p;
    p.max_delegated = cap;
    const auto r = asmtc(inst.social, oracle, inst.mapping, p);
    CHECK(r.assignment.delegated_count() <= cap);
    if (cap == 0) CHECK(r.objective == r.baseline_objective);
  }
}

TEST_CASE("beta = 0 leaves the assignment unchanged") {
  auto inst = testing::random_instance(40, 0.15, 20, 5);
  const DistanceOracle oracle(inst.adhoc);
  const auto start = das(inst.social, oracle, inst.mapping).assignment;
  AsmtcParams p;
  p.beta = 0;
  const auto m = mor(inst.social, start, oracle, inst.mapping, p);
  CHECK(m.assignment == start);
  CHECK(m.committed_objectives.size() == 1);
  CHECK(m.ledger.total() == 0);
}

TEST_CASE("MOR rejects a partial start") {
  Hub h;
  const DistanceOracle oracle(h.adhoc);
  auto a = AgentAssignment::all_self(6);
  a.set_represented(2, false);
  CHECK_THROWS_AS(mor(h.social, a, oracle, LayerMapping::identity(6)), DomainError);
}

TEST_CASE("MOR does nothing at the exact optimum") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = testing::random_instance(7, 0.4, 3, seed);
    const DistanceOracle oracle(inst.adhoc);
    const auto best = brute_force_asp(inst.social, oracle, inst.mapping);
    for (auto mode : {TryingMode::kSequential, TryingMode::kSimultaneous}) {
      AsmtcParams p;
      p.trying = mode;
      const auto m = mor(inst.social, best.assignment, oracle, inst.mapping, p);
      CHECK(m.assignment == best.assignment);
      CHECK(m.committed_objectives == std::vector<double>{best.cost});
    }
  }
}

TEST_CASE("friendless nodes keep themselves") {
  const auto g = SocialGraph::from_edges(5, std::vector<SocialEdge>{});
  std::mt19937_64 rng(2);
  const auto adhoc = testing::random_connected_adhoc(5, 2, rng);
  const DistanceOracle oracle(adhoc);
  const auto r = asmtc(g, oracle, LayerMapping::identity(5));
  CHECK(r.assignment == AgentAssignment::all_self(5));
  CHECK(r.objective == 0.0);
  CHECK(r.das.elections.empty());
  CHECK(r.ledger.influence_hops == 0);
  CHECK(r.ledger.control_hops == 0);
}

TEST_CASE("ASMTC never ends above all-self") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = medium(1000, seed);
    const DistanceOracle oracle(inst.adhoc);
    for (auto mode : {WeightMode::kUniform, WeightMode::kProbability}) {
      AsmtcParams p;
      p.weight_mode = mode;
      const auto r = asmtc(inst.social, oracle, inst.mapping, p);
      CHECK(r.objective <= r.baseline_objective);
      CHECK(r.baseline_objective ==
            doctest::Approx(objective(inst.social, AgentAssignment::all_self(1000), oracle, inst.mapping, mode)));
      CHECK(r.objective == doctest::Approx(objective(inst.social, r.assignment, oracle, inst.mapping, mode)));
      CHECK(r.das.final_objective <= r.das.initial_objective);
      REQUIRE_FALSE(r.mor.committed_objectives.empty());
      CHECK(r.mor.committed_objectives.front() == r.das.final_objective);
      CHECK(r.mor.committed_objectives.back() == r.objective);
      check_mor_trace(r.mor);
      CHECK(r.ledger == r.das.ledger + r.mor.ledger);
      r.assignment.check_candidates(inst.social);
    }
  }
}

TEST_CASE("exact optimum <= ASMTC <= all-self on small instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto inst = testing::random_instance(2 + seed % 7, 0.45, seed % 4, seed);
    const DistanceOracle oracle(inst.adhoc);
    const auto r = asmtc(inst.social, oracle, inst.mapping);
    const auto best = brute_force_asp(inst.social, oracle, inst.mapping);
    CHECK(best.cost <= r.objective);
    CHECK(r.objective <= r.baseline_objective);
  }
}

TEST_CASE("simultaneous trying can overshoot and is then tracked back") {
  std::size_t found = 0;
  for (std::uint64_t seed = 1; seed <= 300 && found < 3; ++seed) {
    auto inst = testing::random_instance(30, 0.25, 10, seed);
    const DistanceOracle oracle(inst.adhoc);
    AsmtcParams p;
    p.trying = TryingMode::kSimultaneous;
    const auto r = asmtc(inst.social, oracle, inst.mapping, p);
    check_mor_trace(r.mor);
    CHECK(r.objective <= r.das.final_objective);
    for (const auto& round : r.mor.rounds) found += round.reverted > 0;
  }
  CHECK(found > 0);
}

TEST_CASE("agents stay candidates and within alpha") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto inst = testing::random_instance(60, 0.1, 30, seed);
    const DistanceOracle oracle(inst.adhoc);
    for (Hops alpha : {1u, 2u}) {
      AsmtcParams p;
      p.alpha = alpha;
      const auto r = asmtc(inst.social, oracle, inst.mapping, p);
      r.assignment.check_candidates(inst.social);
      for (NodeId v = 0; v < 60; ++v) {
        REQUIRE(oracle.distance(inst.mapping.to_adhoc(v), inst.mapping.to_adhoc(r.assignment.agent(v))) <=
                alpha);
      }
    }
  }
}

TEST_CASE("ASMTC is deterministic") {
  const auto inst = medium(500, 9);
  const DistanceOracle oracle(inst.adhoc);
  const auto a = asmtc(inst.social, oracle, inst.mapping);
  const DistanceOracle fresh(inst.adhoc);
  const auto b = asmtc(inst.social, fresh, inst.mapping);
  CHECK(a.assignment == b.assignment);
  CHECK(a.ledger == b.ledger);
  CHECK(a.mor.committed_objectives == b.mor.committed_objectives);
}

TEST_CASE("exact search on tiny instances") {
  const auto one = SocialGraph::from_edges(1, std::vector<SocialEdge>{});
  const auto a1 = AdhocGraph::from_links(1, std::vector<AdhocGraph::Link>{});
  const DistanceOracle o1(a1);
  const auto r1 = brute_force_asp(one, o1, LayerMapping::identity(1));
  CHECK(r1.cost == 0.0);
  CHECK(r1.assignment == AgentAssignment::all_self(1));

  // Friends 0 and 1 are three hops apart; either may represent the other.
  const auto pair = SocialGraph::from_edges(4, std::vector<SocialEdge>{{0, 1, 0.5}, {1, 0, 0.5}});
  const auto a2 = AdhocGraph::from_links(4, std::vector<AdhocGraph::Link>{{0, 2}, {2, 3}, {3, 1}});
  const DistanceOracle o2(a2);
  const auto r2 = brute_force_asp(pair, o2, LayerMapping::identity(4));
  CHECK(r2.cost == 0.0);
  CHECK(r2.combinations == 4);
  CHECK(objective(pair, AgentAssignment::all_self(4), o2, LayerMapping::identity(4)) == 6.0);
}

TEST_CASE("exact search refuses large products") {
  std::vector<SocialEdge> e;
  for (NodeId u = 0; u < 12; ++u) {
    for (NodeId v = 0; v < 12; ++v) {
      if (u != v) e.push_back({u, v, 0.5});
    }
  }
  const auto g = SocialGraph::from_edges(12, e);
  std::mt19937_64 rng(1);
  const auto adhoc = testing::random_connected_adhoc(12, 5, rng);
  const DistanceOracle oracle(adhoc);
  CHECK_THROWS_AS(brute_force_asp(g, oracle, LayerMapping::identity(12)), DomainError);
}

TEST_CASE("exact search matches plain enumeration") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto inst = testing::random_instance(2 + seed % 6, 0.5, seed % 3, seed * 13);
    const DistanceOracle oracle(inst.adhoc);
    const auto fw = testing::floyd_warshall(inst.adhoc);
    const auto r = brute_force_asp(inst.social, oracle, inst.mapping);
    const auto [agents, cost] = testing::recursive_asp(inst.social, fw, inst.mapping);
    CHECK(r.cost == cost);
    CHECK(agents_of(r.assignment) == agents);
    const auto rp = brute_force_asp(inst.social, oracle, inst.mapping, WeightMode::kProbability);
    const auto [ap, cp] = testing::recursive_asp(inst.social, fw, inst.mapping, WeightMode::kProbability);
    CHECK(rp.cost == doctest::Approx(cp));
  }
}

TEST_CASE("assignment CSV round trip") {
  const auto g = testing::example_social(0.5);
  const auto a = AgentAssignment::from_agents(testing::example_agents());
  std::ostringstream out;
  write_assignment(out, a, g);
  CHECK(out.str() == "node,agent\n1,1\n2,4\n3,1\n4,4\n5,1\n6,4\n7,7\n8,8\n");
  std::istringstream in(out.str());
  CHECK(read_assignment(in, g) == a);

  std::istringstream partial("# only one row\n2,4\n");
  const auto p = read_assignment(partial, g);
  CHECK(p.agent(id(2)) == id(4));
  CHECK(p.agent(id(1)) == id(1));

  std::istringstream bad("node,agent\n2,x\n");
  CHECK_THROWS_AS(read_assignment(bad, g), ParseError);
  std::istringstream unknown("9,1\n");
  CHECK_THROWS_AS(read_assignment(unknown, g), ParseError);
  std::istringstream not_friend("7,8\n");
  CHECK_THROWS_AS(read_assignment(not_friend, g), DomainError);
}

TEST_CASE("parameter strings") {
  AsmtcParams p;
  apply_asmtc_params(p, {{"alpha", "3"}, {"beta", "inf"}, {"max_delegated", "12"},
                         {"weight_mode", "probability"}, {"trying", "simultaneous"},
                         {"broadcast_cost", "7"}, {"unicast_per_hop", "2"}});
  CHECK(p.alpha == std::optional<Hops>(3));
  CHECK_FALSE(p.beta.has_value());
  CHECK(p.max_delegated == std::optional<std::size_t>(12));
  CHECK(p.weight_mode == WeightMode::kProbability);
  CHECK(p.trying == TryingMode::kSimultaneous);
  CHECK(p.control.broadcast_for(100) == 7);
  CHECK(p.control.unicast_per_hop == 2);
  set_asmtc_param(p, "broadcast_cost", "auto");
  CHECK(p.control.broadcast_for(100) == 99);
  set_asmtc_param(p, "alpha", "none");
  CHECK_FALSE(p.alpha.has_value());
  CHECK_THROWS_AS(set_asmtc_param(p, "alpha", "-1"), DomainError);
  CHECK_THROWS_AS(set_asmtc_param(p, "gamma", "1"), DomainError);
  CHECK_THROWS_AS(set_asmtc_param(p, "trying", "later"), DomainError);
  CHECK_THROWS_AS(set_asmtc_param(p, "directory_per_hop", "inf"), DomainError);
}
