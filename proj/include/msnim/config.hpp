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

// Flat `key = value` experiment configuration.

#ifndef MSNIM_CONFIG_HPP_
#define MSNIM_CONFIG_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msnim/agent_select.hpp"
#include "msnim/netgen.hpp"
#include "msnim/seeding.hpp"

namespace msnim {

struct ExperimentConfig {
  // Input files. A layer without a path is generated.
  std::optional<std::string> social_path;
  std::optional<std::string> adhoc_path;
  std::optional<std::string> mapping_path;  // random mapping when unset

  GenParams social_gen{.n = 1000, .avg_degree = 10, .max_degree = 50};
  GenParams adhoc_gen{.n = 1000, .avg_degree = 10, .max_degree = 15};

  // Unset: keep probabilities read from the social file, or use a constant
  // 0.05 when there are none.
  std::optional<ProbabilityModel> probability;

  std::size_t k = 10;
  std::size_t trials = 1000;
  std::uint64_t rng_seed = 1;
  unsigned workers = 1;
  std::string out_dir = "out";

  SeedAlgorithm algorithm = SeedAlgorithm::kCelf;
  std::optional<std::size_t> candidate_cap;
  AsmtcParams asmtc;
  DeploymentCostModel deployment;

  // Experiment sweeps.
  std::vector<std::size_t> sweep_k{1, 2, 5, 10};
  std::vector<std::size_t> sweep_n{250, 500, 1000, 2000};
  std::vector<double> sweep_degree{10, 45};
  // Fractions of n allowed to delegate.
  std::vector<double> sweep_delegated{0, 0.125, 0.25, 0.5, 1};

  // Derived seeds, one stream per purpose.
  std::uint64_t social_seed() const;
  std::uint64_t adhoc_seed() const;
  std::uint64_t mapping_seed() const;
  std::uint64_t pool_seed() const;
};

// Sets one key. Throws DomainError for unknown keys and bad values.
void set_config(ExperimentConfig& config, const std::string& key, const std::string& value);

// Reads `key = value` lines; `#` starts a comment. Throws ParseError with the
// line number on lines without '='.
std::vector<std::pair<std::string, std::string>> read_config(std::istream& in);
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

// Splits a `key=value` override.
std::pair<std::string, std::string> split_assignment(const std::string& text);

// `constant:P`, `wc`, `trivalency` or `trivalency:a,b,c`.
ProbabilityModel parse_probability_model(const std::string& text, std::uint64_t seed);

}  // namespace msnim

#endif  // MSNIM_CONFIG_HPP_
