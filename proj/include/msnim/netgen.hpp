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

// Synthetic topologies and probability assignment.
//
// The generator is a reduced LFR benchmark: power-law degrees capped at
// max_degree, power-law community sizes, a fraction mixing_topology of each
// node's stubs wired across communities, configuration-model matching, then
// repairs (rewiring of self-loops and repeated pairs, bridging of
// components). It does not run LFR's iterative rewiring.

#ifndef MSNIM_NETGEN_HPP_
#define MSNIM_NETGEN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "msnim/adhoc_graph.hpp"
#include "msnim/layer_mapping.hpp"
#include "msnim/social_graph.hpp"

namespace msnim {

struct GenParams {
  std::size_t n = 1000;
  double avg_degree = 10.0;
  std::size_t max_degree = 15;
  double degree_exponent = 2.0;     // minus exponent of the degree distribution
  double community_exponent = 1.0;  // minus exponent of the community size distribution
  double mixing_topology = 0.1;     // fraction of a node's links leaving its community
  double mixing_weight = 0.1;       // recorded only; generated links are unweighted
  std::uint64_t rng_seed = 1;

  // Throws DomainError when a field is out of range.
  void validate() const;
};

struct GenDiagnostics {
  std::size_t nodes = 0;
  std::size_t links = 0;
  double target_mean_degree = 0.0;
  double mean_degree = 0.0;
  std::size_t max_degree = 0;
  std::size_t communities = 0;
  double inter_community_fraction = 0.0;
  std::size_t parity_fixes = 0;
  std::size_t rewired = 0;
  std::size_t dropped_stubs = 0;
  std::size_t bridges_added = 0;
  std::size_t bridge_swaps = 0;
  double mixing_weight = 0.0;

  std::string to_json() const;
};

struct GeneratedNetwork {
  AdhocGraph graph;
  std::vector<std::uint32_t> community;
  GenDiagnostics diagnostics;
};

// Connected undirected graph; a pure function of `params`.
GeneratedNetwork generate_manet(const GenParams& params);

// Same generator, each link turned into two directed friendships. The result
// carries no probabilities; see assign_probabilities.
SocialGraph generate_social(const GenParams& params, GenDiagnostics* diagnostics = nullptr);

// Uniform random permutation from an unbiased Fisher-Yates shuffle.
LayerMapping random_mapping(std::size_t n, std::uint64_t rng_seed);

struct ProbabilityModel {
  enum class Kind { kConstant, kWeightedCascade, kTrivalency };

  Kind kind = Kind::kConstant;
  double p = 0.1;                                 // kConstant
  std::vector<double> values{0.1, 0.01, 0.001};   // kTrivalency
  std::uint64_t seed = 0;                         // kTrivalency

  static ProbabilityModel constant(double p);
  static ProbabilityModel weighted_cascade();
  static ProbabilityModel trivalency(std::vector<double> values, std::uint64_t seed);

  void validate() const;
};

// constant: p for every edge. weighted-cascade: p(u,v) = 1 / indegree(v).
// trivalency: each edge draws one of `values` from a hash of (seed, u, v).
SocialGraph assign_probabilities(const SocialGraph& social, const ProbabilityModel& model);

}  // namespace msnim

#endif  // MSNIM_NETGEN_HPP_
