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

#include "msnim/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "json.hpp"
#include "msnim/rng.hpp"

namespace msnim {
namespace {

// P(k) proportional to k^-exponent on the integers [lo, hi].
class DiscretePowerLaw {
 public:
  DiscretePowerLaw(std::size_t lo, std::size_t hi, double exponent) : lo_(lo) {
    double acc = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) {
      acc += std::pow(static_cast<double>(k), -exponent);
      cumulative_.push_back(acc);
    }
  }

  std::size_t sample(Rng& rng) const {
    const double u = rng.uniform01() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return lo_ + static_cast<std::size_t>(it - cumulative_.begin());
  }

  static double mean(std::size_t lo, std::size_t hi, double exponent) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) {
      const double w = std::pow(static_cast<double>(k), -exponent);
      num += w * static_cast<double>(k);
      den += w;
    }
    return num / den;
  }

 private:
  std::size_t lo_;
  std::vector<double> cumulative_;
};

std::uint64_t link_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::vector<std::size_t> degree_sequence(const GenParams& params, Rng& rng, GenDiagnostics& diag) {
  const std::size_t n = params.n;
  const std::size_t cap = params.max_degree;
  const std::size_t floor_degree = params.avg_degree >= 1.0 ? 1 : 0;

  // Lower cut-off whose truncated mean is closest to the target.
  std::size_t kmin = 1;
  double best = INFINITY;
  for (std::size_t k = 1; k <= cap; ++k) {
    const double gap = std::abs(DiscretePowerLaw::mean(k, cap, params.degree_exponent) -
                                params.avg_degree);
    if (gap < best) {
      best = gap;
      kmin = k;
    }
  }
  DiscretePowerLaw law(kmin, cap, params.degree_exponent);
  std::vector<std::size_t> degree(n);
  for (auto& d : degree) d = law.sample(rng);

  // Nudge random nodes by one stub until the sum hits the target exactly.
  const auto target = static_cast<std::size_t>(std::llround(params.avg_degree * static_cast<double>(n)));
  std::size_t sum = std::accumulate(degree.begin(), degree.end(), std::size_t{0});
  while (sum < target) {
    const auto v = rng.below(n);
    if (degree[v] < cap) {
      ++degree[v];
      ++sum;
    }
  }
  while (sum > target) {
    const auto v = rng.below(n);
    if (degree[v] > floor_degree) {
      --degree[v];
      --sum;
    }
  }
  if (sum % 2 == 1) {
    const bool can_shrink = std::any_of(degree.begin(), degree.end(),
                                        [&](std::size_t d) { return d > floor_degree; });
    while (true) {
      const auto v = rng.below(n);
      if (can_shrink && degree[v] > floor_degree) {
        --degree[v];
        break;
      }
      if (!can_shrink && degree[v] < cap) {
        ++degree[v];
        break;
      }
    }
    diag.parity_fixes = 1;
  }
  return degree;
}

std::vector<std::uint32_t> assign_communities(const GenParams& params,
                                              const std::vector<std::size_t>& internal, Rng& rng) {
  const std::size_t n = params.n;
  const std::size_t widest = *std::max_element(internal.begin(), internal.end());
  const std::size_t smin = std::min(n, std::max<std::size_t>(widest + 1, 3));
  const std::size_t smax = std::min(n, std::max(smin + 1, 3 * smin));
  DiscretePowerLaw law(smin, smax, params.community_exponent);

  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  while (total < n) {
    std::size_t s = std::min(law.sample(rng), n - total);
    if (s < smin && !sizes.empty()) {
      sizes.back() += s;
    } else {
      sizes.push_back(s);
    }
    total += s;
  }

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  rng.shuffle(order);
  std::vector<std::uint32_t> community(n);
  std::size_t pos = 0;
  for (std::uint32_t c = 0; c < sizes.size(); ++c) {
    for (std::size_t i = 0; i < sizes[c]; ++i) community[order[pos++]] = c;
  }
  return community;
}

class LinkBuilder {
 public:
  LinkBuilder(std::size_t n, std::size_t classes) : adj_(n), by_class_(classes) {}

  bool try_add(NodeId a, NodeId b, std::size_t cls) {
    if (a == b || !present_.insert(link_key(a, b)).second) return false;
    by_class_[cls].push_back({a, b});
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    return true;
  }

  // Replaces a random link (c, d) of class `cls` by (a, c) and (b, d).
  bool try_swap(NodeId a, NodeId b, std::size_t cls, Rng& rng) {
    auto& pool = by_class_[cls];
    if (pool.empty()) return false;
    const auto idx = rng.below(pool.size());
    auto [c, d] = pool[idx];
    if (rng.below(2)) std::swap(c, d);
    if (a == c || b == d) return false;
    const auto k1 = link_key(a, c), k2 = link_key(b, d);
    if (k1 == k2 || present_.count(k1) || present_.count(k2)) return false;
    remove_at(cls, idx);
    try_add(a, c, cls);
    try_add(b, d, cls);
    return true;
  }

  void remove_at(std::size_t cls, std::size_t idx) {
    auto& pool = by_class_[cls];
    const auto [c, d] = pool[idx];
    pool[idx] = pool.back();
    pool.pop_back();
    present_.erase(link_key(c, d));
    erase_one(adj_[c], d);
    erase_one(adj_[d], c);
  }

  std::size_t degree(NodeId v) const { return adj_[v].size(); }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
  std::size_t classes() const { return by_class_.size(); }
  const std::vector<std::pair<NodeId, NodeId>>& links_of(std::size_t cls) const {
    return by_class_[cls];
  }
  // Class and index of the link (a, b); assumes it exists.
  std::pair<std::size_t, std::size_t> locate(NodeId a, NodeId b) const {
    const auto key = link_key(a, b);
    for (std::size_t cls = 0; cls < by_class_.size(); ++cls) {
      const auto& pool = by_class_[cls];
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (link_key(pool[i].first, pool[i].second) == key) return {cls, i};
      }
    }
    return {by_class_.size(), 0};
  }

  std::vector<AdhocGraph::Link> all_links() const {
    std::vector<AdhocGraph::Link> out;
    for (const auto& pool : by_class_) out.insert(out.end(), pool.begin(), pool.end());
    for (auto& [a, b] : out) {
      if (a > b) std::swap(a, b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static void erase_one(std::vector<NodeId>& v, NodeId x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it != v.end()) {
      *it = v.back();
      v.pop_back();
    }
  }

  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::vector<std::pair<NodeId, NodeId>>> by_class_;
  std::unordered_set<std::uint64_t> present_;
};

void match_stubs(std::vector<NodeId>& stubs, std::size_t cls, LinkBuilder& links, Rng& rng,
                 GenDiagnostics& diag) {
  rng.shuffle(stubs);
  std::vector<std::pair<NodeId, NodeId>> bad;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    if (!links.try_add(stubs[i], stubs[i + 1], cls)) bad.emplace_back(stubs[i], stubs[i + 1]);
  }
  for (auto [a, b] : bad) {
    bool fixed = false;
    for (int attempt = 0; attempt < 64 && !fixed; ++attempt) fixed = links.try_swap(a, b, cls, rng);
    if (fixed) {
      ++diag.rewired;
    } else {
      diag.dropped_stubs += 2;
    }
  }
}

std::vector<std::vector<NodeId>> components(const LinkBuilder& links, std::size_t n) {
  std::vector<int> seen(n, 0);
  std::vector<std::vector<NodeId>> comps;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (NodeId w : links.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return comps;
}

NodeId min_degree_node(const std::vector<NodeId>& nodes, const LinkBuilder& links) {
  NodeId best = nodes.front();
  for (NodeId v : nodes) {
    if (links.degree(v) < links.degree(best)) best = v;
  }
  return best;
}

// Joins every smaller component to the largest one. Adds a link when both
// ends have spare degree, otherwise swaps a link from each side so that
// degrees (and the cap) are preserved.
void bridge_components(const GenParams& params, LinkBuilder& links, Rng& rng, GenDiagnostics& diag) {
  const std::size_t external = links.classes() - 1;
  for (int pass = 0; pass < 64; ++pass) {
    auto comps = components(links, params.n);
    if (comps.size() <= 1) return;
    const auto& giant = comps.front();
    for (std::size_t c = comps.size() - 1; c >= 1; --c) {
      const auto& comp = comps[c];
      const NodeId a = min_degree_node(comp, links);
      const NodeId b = min_degree_node(giant, links);
      if (links.degree(a) < params.max_degree && links.degree(b) < params.max_degree) {
        links.try_add(a, b, external);
        ++diag.bridges_added;
        continue;
      }
      // Every node on one side is saturated; trade a link from each side.
      if (links.neighbors(a).empty()) continue;
      const NodeId a2 = links.neighbors(a).front();
      const NodeId b2 = giant[rng.below(giant.size())];
      if (links.neighbors(b2).empty()) continue;
      const NodeId b3 = links.neighbors(b2)[rng.below(links.neighbors(b2).size())];
      auto [ca, ia] = links.locate(a, a2);
      links.remove_at(ca, ia);
      auto [cb, ib] = links.locate(b2, b3);
      links.remove_at(cb, ib);
      if (!links.try_add(a, b2, external) || !links.try_add(a2, b3, external)) {
        // Degenerate pick; restore and let the next pass retry.
        links.try_add(a, a2, ca);
        links.try_add(b2, b3, cb);
        continue;
      }
      ++diag.bridge_swaps;
    }
  }
  if (components(links, params.n).size() > 1) {
    throw std::logic_error("generator failed to connect the graph");
  }
}

GeneratedNetwork generate_lfr_lite(const GenParams& params) {
  params.validate();
  Rng rng(params.rng_seed);
  GeneratedNetwork out;
  auto& diag = out.diagnostics;
  diag.nodes = params.n;
  diag.target_mean_degree = params.avg_degree;
  diag.mixing_weight = params.mixing_weight;

  auto degree = degree_sequence(params, rng, diag);
  std::vector<std::size_t> internal(params.n);
  for (NodeId v = 0; v < params.n; ++v) {
    internal[v] = static_cast<std::size_t>(
        std::llround((1.0 - params.mixing_topology) * static_cast<double>(degree[v])));
  }
  out.community = assign_communities(params, internal, rng);
  const std::size_t num_comms =
      *std::max_element(out.community.begin(), out.community.end()) + std::size_t{1};
  diag.communities = num_comms;

  std::vector<std::vector<NodeId>> members(num_comms);
  for (NodeId v = 0; v < params.n; ++v) members[out.community[v]].push_back(v);
  for (const auto& m : members) {
    for (NodeId v : m) internal[v] = std::min(internal[v], m.size() - 1);
  }

  // Class c < num_comms holds links inside community c; the last class holds
  // links placed by external stubs.
  LinkBuilder links(params.n, num_comms + 1);
  std::vector<NodeId> external_stubs;
  for (std::uint32_t c = 0; c < num_comms; ++c) {
    std::vector<NodeId> stubs;
    for (NodeId v : members[c]) stubs.insert(stubs.end(), internal[v], v);
    if (stubs.size() % 2 == 1) {
      // Move one stub of the last listed member outside the community.
      const NodeId v = stubs.back();
      stubs.pop_back();
      --internal[v];
    }
    match_stubs(stubs, c, links, rng, diag);
  }
  for (NodeId v = 0; v < params.n; ++v) {
    external_stubs.insert(external_stubs.end(), degree[v] - internal[v], v);
  }
  match_stubs(external_stubs, num_comms, links, rng, diag);

  bridge_components(params, links, rng, diag);

  const auto all = links.all_links();
  out.graph = AdhocGraph::from_links(params.n, all);
  std::size_t crossing = 0;
  for (auto [a, b] : all) crossing += out.community[a] != out.community[b] ? 1 : 0;
  diag.links = all.size();
  diag.mean_degree = 2.0 * static_cast<double>(all.size()) / static_cast<double>(params.n);
  for (NodeId v = 0; v < params.n; ++v) diag.max_degree = std::max(diag.max_degree, out.graph.degree(v));
  diag.inter_community_fraction =
      all.empty() ? 0.0 : static_cast<double>(crossing) / static_cast<double>(all.size());
  return out;
}

}  // namespace

void GenParams::validate() const {
  if (n < 2) throw DomainError("generator needs n >= 2");
  if (!(avg_degree > 0.0)) throw DomainError("avg_degree must be positive");
  if (!(avg_degree <= static_cast<double>(max_degree))) {
    throw DomainError("avg_degree must not exceed max_degree");
  }
  if (max_degree >= n) throw DomainError("max_degree must be below n");
  if (!(degree_exponent > 0.0)) throw DomainError("degree_exponent must be positive");
  if (!(community_exponent > 0.0)) throw DomainError("community_exponent must be positive");
  if (!(mixing_topology >= 0.0 && mixing_topology <= 1.0)) {
    throw DomainError("mixing_topology must lie in [0, 1]");
  }
  if (!(mixing_weight >= 0.0 && mixing_weight <= 1.0)) {
    throw DomainError("mixing_weight must lie in [0, 1]");
  }
}

std::string GenDiagnostics::to_json() const {
  nlohmann::ordered_json j;
  j["nodes"] = nodes;
  j["links"] = links;
  j["target_mean_degree"] = target_mean_degree;
  j["mean_degree"] = mean_degree;
  j["max_degree"] = max_degree;
  j["communities"] = communities;
  j["inter_community_fraction"] = inter_community_fraction;
  j["parity_fixes"] = parity_fixes;
  j["rewired"] = rewired;
  j["dropped_stubs"] = dropped_stubs;
  j["bridges_added"] = bridges_added;
  j["bridge_swaps"] = bridge_swaps;
  j["mixing_weight_unused"] = mixing_weight;
  return j.dump(2);
}

GeneratedNetwork generate_manet(const GenParams& params) { return generate_lfr_lite(params); }

SocialGraph generate_social(const GenParams& params, GenDiagnostics* diagnostics) {
  auto net = generate_lfr_lite(params);
  std::vector<SocialEdge> edges;
  edges.reserve(net.graph.num_links() * 2);
  for (auto [a, b] : net.graph.links()) {
    edges.push_back({a, b, 0.0});
    edges.push_back({b, a, 0.0});
  }
  if (diagnostics) *diagnostics = net.diagnostics;
  return SocialGraph::from_edges(params.n, edges, false);
}

LayerMapping random_mapping(std::size_t n, std::uint64_t rng_seed) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  Rng rng(rng_seed);
  rng.shuffle(perm);
  return LayerMapping::from_permutation(std::move(perm));
}

ProbabilityModel ProbabilityModel::constant(double p) {
  ProbabilityModel m;
  m.kind = Kind::kConstant;
  m.p = p;
  m.validate();
  return m;
}

ProbabilityModel ProbabilityModel::weighted_cascade() {
  ProbabilityModel m;
  m.kind = Kind::kWeightedCascade;
  return m;
}

ProbabilityModel ProbabilityModel::trivalency(std::vector<double> values, std::uint64_t seed) {
  ProbabilityModel m;
  m.kind = Kind::kTrivalency;
  m.values = std::move(values);
  m.seed = seed;
  m.validate();
  return m;
}

void ProbabilityModel::validate() const {
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (kind == Kind::kConstant && !in_unit(p)) throw DomainError("constant p outside [0, 1]");
  if (kind == Kind::kTrivalency) {
    if (values.empty()) throw DomainError("trivalency needs at least one value");
    for (double v : values) {
      if (!in_unit(v)) throw DomainError("trivalency value outside [0, 1]");
    }
  }
}

SocialGraph assign_probabilities(const SocialGraph& social, const ProbabilityModel& model) {
  model.validate();
  std::vector<double> p(social.num_edges());
  for (EdgeId e = 0; e < social.num_edges(); ++e) {
    const NodeId u = social.edge_source(e);
    const NodeId v = social.edge(e).node;
    switch (model.kind) {
      case ProbabilityModel::Kind::kConstant:
        p[e] = model.p;
        break;
      case ProbabilityModel::Kind::kWeightedCascade:
        // indegree(v) >= 1 because e enters v.
        p[e] = 1.0 / static_cast<double>(social.in_degree(v));
        break;
      case ProbabilityModel::Kind::kTrivalency: {
        const auto h = hash_combine(model.seed, (static_cast<std::uint64_t>(u) << 32) | v);
        p[e] = model.values[h % model.values.size()];
        break;
      }
    }
  }
  return social.with_probabilities(p);
}

}  // namespace msnim
