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

// Commands and experiment drivers behind the command-line tool. Every driver
// is a pure function of the configuration and input files.

#ifndef MSNIM_EXPERIMENTS_HPP_
#define MSNIM_EXPERIMENTS_HPP_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "msnim/adhoc_graph.hpp"
#include "msnim/agent_select.hpp"
#include "msnim/config.hpp"
#include "msnim/diffusion.hpp"
#include "msnim/layer_mapping.hpp"
#include "msnim/netgen.hpp"
#include "msnim/seeding.hpp"
#include "msnim/social_graph.hpp"
#include "msnim/validate.hpp"

namespace msnim {

// Bad command-line usage (exit status 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  SocialGraph social;
  AdhocGraph adhoc;
  LayerMapping mapping;
  std::optional<GenDiagnostics> social_diagnostics;
  std::optional<GenDiagnostics> adhoc_diagnostics;
  LayerDiagnostics layers;
};

// Loads or generates both layers, applies the probability model and the
// mapping, and validates the pair.
Instance load_instance(const ExperimentConfig& config);

// Seeds, agents and the deployment cost with and without those agents.
struct OverheadRun {
  SeedSelection selection;
  AsmtcResult agents;
  DeploymentReport baseline;     // every node its own agent
  DeploymentReport with_agents;  // agents from the heuristic
};

OverheadRun run_overhead(const Instance& instance, const ExperimentConfig& config, std::size_t k);

// Sum of the first k iterations of a deployment report.
OverheadLedger prefix_total(const DeploymentReport& report, std::size_t k);

// Writes social.txt, adhoc.txt, mapping.csv and diagnostics.json to the
// output directory (created when missing). Returns the instance.
Instance cmd_gen(const ExperimentConfig& config, std::ostream& log);
// Writes seeds.csv.
SeedSelection cmd_seeds(const ExperimentConfig& config, std::ostream& log);
// Writes agents.csv and agents_ledger.csv.
AsmtcResult cmd_agents(const ExperimentConfig& config, std::ostream& log);

enum class Figure { kSpread, kControl, kAgentCount, kDegree };

// "fig3" .. "fig6". Throws UsageError otherwise.
Figure parse_figure(const std::string& name);
std::string figure_name(Figure figure);

// CSV columns:
//   fig3: K,spread_without_agents,spread_with_agents
//   fig4: n,asmtc_control_overhead,deployment_overhead_with_agents
//   fig5: num_delegated_allowed,deployment_overhead
//   fig6: K,avg_degree,overhead_no_agents,overhead_asmtc,reduction_pct
void run_experiment(Figure figure, const ExperimentConfig& config, std::ostream& csv,
                    std::ostream& log);

}  // namespace msnim

#endif  // MSNIM_EXPERIMENTS_HPP_
