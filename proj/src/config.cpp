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

#include "msnim/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>

#include "msnim/rng.hpp"

namespace msnim {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T x{};
  const auto r = std::from_chars(value.data(), value.data() + value.size(), x);
  if (r.ec != std::errc() || r.ptr != value.data() + value.size()) {
    throw DomainError(key + ": cannot parse '" + value + "'");
  }
  return x;
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& value) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    auto end = value.find(',', start);
    if (end == std::string::npos) end = value.size();
    const std::string item = trim(std::string_view(value).substr(start, end - start));
    if (!item.empty()) out.push_back(parse_number<T>(key, item));
    start = end + 1;
  }
  if (out.empty()) throw DomainError(key + ": empty list");
  return out;
}

bool set_gen(GenParams& g, const std::string& field, const std::string& key,
             const std::string& value) {
  if (field == "n") {
    g.n = parse_number<std::size_t>(key, value);
  } else if (field == "avg_degree") {
    g.avg_degree = parse_number<double>(key, value);
  } else if (field == "max_degree") {
    g.max_degree = parse_number<std::size_t>(key, value);
  } else if (field == "degree_exponent") {
    g.degree_exponent = parse_number<double>(key, value);
  } else if (field == "community_exponent") {
    g.community_exponent = parse_number<double>(key, value);
  } else if (field == "mixing_topology") {
    g.mixing_topology = parse_number<double>(key, value);
  } else if (field == "mixing_weight") {
    g.mixing_weight = parse_number<double>(key, value);
  } else {
    return false;
  }
  return true;
}

}  // namespace

std::uint64_t ExperimentConfig::social_seed() const { return hash_combine(rng_seed, 1); }
std::uint64_t ExperimentConfig::adhoc_seed() const { return hash_combine(rng_seed, 2); }
std::uint64_t ExperimentConfig::mapping_seed() const { return hash_combine(rng_seed, 3); }
std::uint64_t ExperimentConfig::pool_seed() const { return hash_combine(rng_seed, 4); }

ProbabilityModel parse_probability_model(const std::string& text, std::uint64_t seed) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  ProbabilityModel m;
  if (kind == "constant") {
    m = ProbabilityModel::constant(arg.empty() ? 0.1 : parse_number<double>("probability", arg));
  } else if (kind == "wc") {
    m = ProbabilityModel::weighted_cascade();
  } else if (kind == "trivalency") {
    m = arg.empty() ? ProbabilityModel::trivalency({0.1, 0.01, 0.001}, seed)
                    : ProbabilityModel::trivalency(parse_list<double>("probability", arg), seed);
  } else {
    throw DomainError("probability must be constant:P, wc or trivalency[:a,b,...]");
  }
  m.validate();
  return m;
}

void set_config(ExperimentConfig& c, const std::string& key, const std::string& value) {
  const auto dot = key.find('.');
  const std::string head = key.substr(0, dot);
  const std::string field = dot == std::string::npos ? "" : key.substr(dot + 1);

  if (key == "social") {
    c.social_path = value;
  } else if (key == "adhoc") {
    c.adhoc_path = value;
  } else if (key == "mapping") {
    c.mapping_path = value;
  } else if (key == "n") {
    c.social_gen.n = c.adhoc_gen.n = parse_number<std::size_t>(key, value);
  } else if (head == "social" && set_gen(c.social_gen, field, key, value)) {
  } else if (head == "adhoc" && set_gen(c.adhoc_gen, field, key, value)) {
  } else if (key == "probability") {
    c.probability = parse_probability_model(value, c.rng_seed);
  } else if (key == "k") {
    c.k = parse_number<std::size_t>(key, value);
  } else if (key == "trials") {
    c.trials = parse_number<std::size_t>(key, value);
  } else if (key == "seed") {
    c.rng_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "workers") {
    c.workers = parse_number<unsigned>(key, value);
  } else if (key == "out") {
    c.out_dir = value;
  } else if (key == "algo") {
    if (value == "celf") {
      c.algorithm = SeedAlgorithm::kCelf;
    } else if (value == "greedy") {
      c.algorithm = SeedAlgorithm::kGreedy;
    } else {
      throw DomainError("algo must be celf or greedy");
    }
  } else if (key == "candidate_cap") {
    c.candidate_cap = value == "none" ? std::nullopt
                                      : std::optional(parse_number<std::size_t>(key, value));
  } else if (head == "asmtc" && !field.empty()) {
    set_asmtc_param(c.asmtc, field, value);
  } else if (key == "deployment.broadcast_cost") {
    c.deployment.broadcast_cost = value == "auto"
                                      ? std::nullopt
                                      : std::optional(parse_number<std::uint64_t>(key, value));
  } else if (key == "deployment.returns") {
    if (value == "agent") {
      c.deployment.returns = ReturnRoute::kAgentToAgent;
    } else if (value == "node") {
      c.deployment.returns = ReturnRoute::kNodeToNode;
    } else if (value == "none") {
      c.deployment.returns = ReturnRoute::kNone;
    } else {
      throw DomainError("deployment.returns must be agent, node or none");
    }
  } else if (key == "sweep.k") {
    c.sweep_k = parse_list<std::size_t>(key, value);
  } else if (key == "sweep.n") {
    c.sweep_n = parse_list<std::size_t>(key, value);
  } else if (key == "sweep.degree") {
    c.sweep_degree = parse_list<double>(key, value);
  } else if (key == "sweep.delegated") {
    c.sweep_delegated = parse_list<double>(key, value);
  } else {
    throw DomainError("unknown config key '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> read_config(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    std::string key = trim(std::string_view(body).substr(0, eq));
    if (key.empty()) throw ParseError(line_no, "empty key");
    out.emplace_back(std::move(key), trim(std::string_view(body).substr(eq + 1)));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file " + path);
  return read_config(in);
}

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw DomainError("expected key=value, got '" + text + "'");
  return {trim(std::string_view(text).substr(0, eq)), trim(std::string_view(text).substr(eq + 1))};
}

}  // namespace msnim
