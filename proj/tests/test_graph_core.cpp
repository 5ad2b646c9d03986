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

#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "msnim/distance_oracle.hpp"
#include "msnim/edge_list.hpp"
#include "msnim/netgen.hpp"
#include "msnim/validate.hpp"
#include "support.hpp"

using namespace msnim;
using testing::id;

namespace {

SocialGraph social_from(const std::string& text, SocialFormat fmt = {}, LoadStats* stats = nullptr) {
  std::istringstream in(text);
  return load_social(in, fmt, stats);
}

AdhocGraph adhoc_from(const std::string& text) {
  std::istringstream in(text);
  return load_adhoc(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    social_from(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("load_social reads probabilities per direction") {
  const auto g = social_from("0 1 0.5\n1 0 0.2\n");
  REQUIRE(g.num_nodes() == 2);
  REQUIRE(g.num_edges() == 2);
  CHECK(g.out_edges(0)[0].node == 1);
  CHECK(g.out_edges(0)[0].p == 0.5);
  CHECK(g.out_edges(1)[0].node == 0);
  CHECK(g.out_edges(1)[0].p == 0.2);
  CHECK(g.has_probabilities());
}

TEST_CASE("load_social on an empty stream gives an empty graph") {
  const auto g = social_from("");
  CHECK(g.num_nodes() == 0);
  CHECK(g.num_edges() == 0);
  const auto h = social_from("# only a comment\n\n");
  CHECK(h.num_nodes() == 0);
}

TEST_CASE("friends of node 4 in the example network") {
  const auto g = testing::example_social(0.5);
  std::vector<NodeId> f(g.friends(id(4)).begin(), g.friends(id(4)).end());
  CHECK(f == std::vector<NodeId>{id(2), id(3), id(6), id(7)});

  std::ostringstream out;
  write_social(out, g);
  std::istringstream in(out.str());
  const auto back = load_social(in);
  std::vector<NodeId> f2(back.friends(id(4)).begin(), back.friends(id(4)).end());
  CHECK(f2 == f);
  CHECK(back.labels()[id(4)] == 4);
}

TEST_CASE("load_social compacts labels and keeps them") {
  const auto g = social_from("# SNAP style\n100 7\n7 42\n");
  REQUIRE(g.num_nodes() == 3);
  CHECK(std::vector<std::int64_t>(g.labels().begin(), g.labels().end()) ==
        std::vector<std::int64_t>{7, 42, 100});
  CHECK(g.out_edges(2)[0].node == 0);
  CHECK_FALSE(g.has_probabilities());
}

TEST_CASE("duplicate social edges keep the last probability") {
  LoadStats stats;
  const auto g = social_from("0 1 0.1\n0 1 0.7\n", {}, &stats);
  REQUIRE(g.num_edges() == 1);
  CHECK(g.out_edges(0)[0].p == 0.7);
  CHECK(stats.duplicates == 1);
}

TEST_CASE("malformed social records report their line") {
  CHECK(parse_error_line("0 1\nzero one\n") == 2);
  CHECK(parse_error_line("0 1 0.5\n1 2 0.5 9\n") == 2);
  CHECK(parse_error_line("0 1 0.5\n\n# c\n1 2\n") == 4);  // mixed p columns
  SocialFormat required;
  required.probability = SocialFormat::Probability::kRequired;
  CHECK_THROWS_AS(social_from("0 1\n", required), ParseError);
}

TEST_CASE("probability outside [0,1] is a domain error") {
  CHECK_THROWS_AS(social_from("0 1 1.5\n"), DomainError);
  CHECK_THROWS_AS(social_from("0 1 -0.1\n"), DomainError);
  SocialFormat ignore;
  ignore.probability = SocialFormat::Probability::kIgnore;
  CHECK_NOTHROW(social_from("0 1 1.5\n", ignore));
}

TEST_CASE("social self-loops are dropped or rejected") {
  LoadStats stats;
  const auto g = social_from("0 0\n0 1\n", {}, &stats);
  CHECK(g.num_edges() == 1);
  CHECK(stats.self_loops_dropped == 1);
  SocialFormat strict;
  strict.drop_self_loops = false;
  CHECK_THROWS_AS(social_from("0 0\n", strict), DomainError);
  const SocialEdge loop{0, 0, 0.5};
  CHECK_THROWS_AS(SocialGraph::from_edges(1, std::span(&loop, 1)), DomainError);
}

TEST_CASE("load_adhoc builds a symmetric graph") {
  const auto path = adhoc_from("0 1\n1 2\n");
  REQUIRE(path.num_nodes() == 3);
  CHECK(path.degree(0) == 1);
  CHECK(path.degree(1) == 2);
  CHECK(path.adjacent(2, 1));

  const auto dup = adhoc_from("0 1\n0 1\n");
  CHECK(dup.num_links() == 1);
  CHECK(dup.degree(0) == 1);

  CHECK_THROWS_AS(adhoc_from("3 3\n"), DomainError);
}

TEST_CASE("hop distances in the example network") {
  const auto adhoc = testing::example_adhoc();
  const DistanceOracle oracle(adhoc);
  CHECK(oracle.distance(id(4), id(6)) == 2);
  CHECK(oracle.distance(id(3), id(4)) == 3);
  CHECK(oracle.distance(id(4), id(6)) + oracle.distance(id(3), id(4)) == 5);
  CHECK(oracle.distance(id(4), id(2)) == 4);
  CHECK(oracle.distance(id(4), id(1)) == 2);
  for (NodeId v = 0; v < 8; ++v) CHECK(oracle.distance(v, v) == 0);
}

TEST_CASE("three-link chain: d(3,4) via nodes 6 and 5") {
  const auto g = adhoc_from("3 6\n6 5\n5 4\n5 1\n");
  // Labels compact to 1,3,4,5,6 -> ids 0..4.
  const DistanceOracle oracle(g);
  CHECK(oracle.distance(1, 2) == 3);
}

TEST_CASE("BFS distances equal Floyd-Warshall") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = seed == 1 ? 50 : 2 + rng() % 63;
    const double density = std::uniform_real_distribution<double>(0.01, 0.2)(rng);
    const auto g = testing::random_adhoc(n, density, rng);
    const auto ref = testing::floyd_warshall(g);
    const DistanceOracle oracle(g);
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = 0; b < n; ++b) REQUIRE(oracle.distance(a, b) == ref[a][b]);
    }
  }
}

TEST_CASE("disconnected pairs are unreachable") {
  const auto g = adhoc_from("0 1\n2 3\n");
  const DistanceOracle oracle(g);
  CHECK(oracle.distance(0, 3) == kUnreachable);
  CHECK(oracle.distance(1, 0) == 1);
}

TEST_CASE("distance oracle symmetry and triangle inequality on a generated graph") {
  const auto net = generate_manet({.n = 500, .avg_degree = 8, .max_degree = 15, .rng_seed = 3});
  const DistanceOracle oracle(net.graph);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<NodeId> pick(0, 499);
  for (int i = 0; i < 1000; ++i) {
    const NodeId a = pick(rng), b = pick(rng), c = pick(rng);
    REQUIRE(oracle.distance(a, b) == oracle.distance(b, a));
    REQUIRE(oracle.distance(a, b) <= oracle.distance(a, c) + oracle.distance(c, b));
  }
}

TEST_CASE("row cache capacity evicts the oldest rows") {
  const auto g = adhoc_from("0 1\n1 2\n2 3\n3 4\n");
  const DistanceOracle bounded(g, 2);
  for (NodeId v = 0; v < 5; ++v) bounded.row(v);
  CHECK(bounded.cached_rows() == 2);
  CHECK(bounded.distance(0, 4) == 4);

  const DistanceOracle unbounded(g);
  for (NodeId v = 0; v < 5; ++v) unbounded.row(v);
  CHECK(unbounded.cached_rows() == 5);
  CHECK_THROWS_AS(unbounded.row(5), DomainError);
}

TEST_CASE("concurrent row fills agree") {
  const auto net = generate_manet({.n = 400, .avg_degree = 6, .max_degree = 12, .rng_seed = 9});
  const DistanceOracle shared(net.graph, 64);
  std::vector<std::thread> threads;
  std::vector<int> bad(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (NodeId s = 0; s < 400; ++s) {
        const NodeId src = (s * 7 + t * 13) % 400;
        if (*shared.row(src) != DistanceOracle::bfs(net.graph, src)) ++bad[t];
      }
    });
  }
  for (auto& th : threads) th.join();
  CHECK(bad == std::vector<int>(4, 0));
}

TEST_CASE("in_edges is the exact transpose of out_edges") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed);
    const auto g = testing::random_social(30, 0.2, rng);
    std::multiset<std::tuple<NodeId, NodeId, double>> out, in;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      for (const auto& a : g.out_edges(u)) out.insert({u, a.node, a.p});
      for (const auto& a : g.in_edges(u)) in.insert({a.node, u, a.p});
    }
    REQUIRE(out == in);
    REQUIRE(out.size() == g.num_edges());
  }
}

TEST_CASE("write then load reproduces both layers") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    const auto s = testing::random_social(25, 0.15, rng);
    const auto a = testing::random_adhoc(25, 0.1, rng);
    std::ostringstream so, ao;
    write_social(so, s);
    write_adhoc(ao, a);
    std::istringstream si(so.str()), ai(ao.str());
    const auto s2 = load_social(si);
    const auto a2 = load_adhoc(ai);
    CHECK(s2 == s);
    CHECK(a2 == a);
    std::ostringstream so2;
    write_social(so2, s2);
    CHECK(so2.str() == so.str());
  }
}

TEST_CASE("mapping CSV round trip") {
  std::mt19937_64 rng(4);
  const auto s = testing::random_social(12, 0.3, rng);
  const auto a = testing::random_adhoc(12, 0.3, rng);
  const auto m = testing::random_permutation(12, rng);
  std::ostringstream out;
  write_mapping(out, m, s, a);
  std::istringstream in(out.str());
  CHECK(read_mapping(in, s, a) == m);
}

TEST_CASE("layer mapping inverse and composition") {
  std::mt19937_64 rng(5);
  const auto m = testing::random_permutation(100, rng);
  const auto inv = m.inverse();
  for (NodeId v = 0; v < 100; ++v) {
    CHECK(inv.to_adhoc(m.to_adhoc(v)) == v);
    CHECK(m.to_social(m.to_adhoc(v)) == v);
  }
  CHECK(inv.after(m) == LayerMapping::identity(100));
  CHECK_THROWS_AS(LayerMapping::from_permutation({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(LayerMapping::from_permutation({0, 3}), DomainError);
}

TEST_CASE("validate_layers") {
  const auto social = testing::example_social(0.5);
  const auto adhoc = testing::example_adhoc();
  const auto clean = validate_layers(social, adhoc, LayerMapping::identity(8));
  CHECK(clean.clean());
  CHECK(clean.adhoc_components == std::vector<std::size_t>{8});

  const auto small = AdhocGraph::from_links(7, std::vector<AdhocGraph::Link>{{0, 1}});
  CHECK_THROWS_AS(validate_layers(social, small, LayerMapping::identity(7)), DomainError);
  CHECK_THROWS_AS(validate_layers(social, adhoc, LayerMapping::identity(7)), DomainError);

  const auto split = AdhocGraph::from_links(
      8, std::vector<AdhocGraph::Link>{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  const auto d = validate_layers(social, split, LayerMapping::identity(8));
  CHECK(d.adhoc_components == std::vector<std::size_t>{5, 3});
  REQUIRE(d.warnings.size() == 1);
  CHECK(d.warnings[0].find("sizes 5,3") != std::string::npos);

  const auto lonely = SocialGraph::from_edges(8, std::vector<SocialEdge>{{0, 1, 0.5}});
  const auto d2 = validate_layers(lonely, adhoc, LayerMapping::identity(8));
  CHECK(d2.isolated_social.size() == 6);
  CHECK_FALSE(d2.clean());
}
