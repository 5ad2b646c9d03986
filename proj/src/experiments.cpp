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

#include "msnim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "msnim/edge_list.hpp"
#include "msnim/rng.hpp"

namespace msnim {
namespace {

std::ofstream open_output(const ExperimentConfig& config, const std::string& name) {
  std::filesystem::create_directories(config.out_dir);
  const auto path = std::filesystem::path(config.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  return out;
}

SeedSelection select(const SocialGraph& social, std::size_t k, const LiveEdgePool& live,
                     const ExperimentConfig& config) {
  SeedingOptions opt;
  opt.candidate_cap = config.candidate_cap;
  opt.workers = config.workers;
  return config.algorithm == SeedAlgorithm::kCelf ? celf_select(social, k, live, opt)
                                                  : greedy_select(social, k, live, opt);
}

DeploymentReport deploy(const Instance& inst, const SeedSelection& sel,
                        const AgentAssignment& assignment, const DistanceOracle& oracle,
                        const LiveEdgePool& live, const ExperimentConfig& config) {
  DeploymentOptions opt;
  opt.workers = config.workers;
  return deployment_overhead(inst.social, sel, assignment, oracle, inst.mapping, live,
                             config.deployment, opt);
}

TrialPool pool_of(const ExperimentConfig& config) { return {config.pool_seed(), config.trials}; }

void require_generated(const ExperimentConfig& config, const std::string& what) {
  if (config.social_path || config.adhoc_path) {
    throw UsageError(what + " regenerates the layers and cannot use input files");
  }
}

std::string percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

Instance load_instance(const ExperimentConfig& config) {
  Instance inst;
  GenParams social_gen = config.social_gen;
  GenParams adhoc_gen = config.adhoc_gen;
  social_gen.rng_seed = config.social_seed();
  adhoc_gen.rng_seed = config.adhoc_seed();

  if (config.social_path) {
    inst.social = load_social_file(*config.social_path);
    adhoc_gen.n = inst.social.num_nodes();
  }
  if (config.adhoc_path) {
    inst.adhoc = load_adhoc_file(*config.adhoc_path);
    social_gen.n = inst.adhoc.num_nodes();
  }
  if (!config.social_path) {
    GenDiagnostics d;
    inst.social = generate_social(social_gen, &d);
    inst.social_diagnostics = d;
  }
  if (!config.adhoc_path) {
    auto net = generate_manet(adhoc_gen);
    inst.adhoc = std::move(net.graph);
    inst.adhoc_diagnostics = net.diagnostics;
  }

  if (config.probability) {
    ProbabilityModel model = *config.probability;
    model.seed = hash_combine(config.rng_seed, 5);
    inst.social = assign_probabilities(inst.social, model);
  } else if (!inst.social.has_probabilities()) {
    inst.social = assign_probabilities(inst.social, ProbabilityModel::constant(0.05));
  }

  if (inst.social.num_nodes() != inst.adhoc.num_nodes()) {
    throw DomainError("social layer has " + std::to_string(inst.social.num_nodes()) +
                      " nodes, ad-hoc layer has " + std::to_string(inst.adhoc.num_nodes()));
  }
  if (config.mapping_path) {
    std::ifstream in(*config.mapping_path);
    if (!in) throw DomainError("cannot open " + *config.mapping_path);
    inst.mapping = read_mapping(in, inst.social, inst.adhoc);
  } else {
    inst.mapping = random_mapping(inst.social.num_nodes(), config.mapping_seed());
  }
  inst.layers = validate_layers(inst.social, inst.adhoc, inst.mapping);
  return inst;
}

OverheadLedger prefix_total(const DeploymentReport& report, std::size_t k) {
  OverheadLedger sum;
  for (std::size_t i = 0; i < std::min(k, report.per_iteration.size()); ++i) {
    sum += report.per_iteration[i];
  }
  return sum;
}

OverheadRun run_overhead(const Instance& inst, const ExperimentConfig& config, std::size_t k) {
  const LiveEdgePool live(inst.social, pool_of(config), config.workers);
  const DistanceOracle oracle(inst.adhoc);
  OverheadRun run;
  run.selection = select(inst.social, k, live, config);
  run.agents = asmtc(inst.social, oracle, inst.mapping, config.asmtc);
  run.baseline = deploy(inst, run.selection, AgentAssignment::all_self(inst.social.num_nodes()),
                        oracle, live, config);
  run.with_agents = deploy(inst, run.selection, run.agents.assignment, oracle, live, config);
  return run;
}

Instance cmd_gen(const ExperimentConfig& config, std::ostream& log) {
  Instance inst = load_instance(config);
  {
    auto out = open_output(config, "social.txt");
    write_social(out, inst.social);
  }
  {
    auto out = open_output(config, "adhoc.txt");
    write_adhoc(out, inst.adhoc);
  }
  {
    auto out = open_output(config, "mapping.csv");
    write_mapping(out, inst.mapping, inst.social, inst.adhoc);
  }
  std::string json = "{\n";
  json += "\"social\": " + (inst.social_diagnostics ? inst.social_diagnostics->to_json() : "null");
  json += ",\n\"adhoc\": " + (inst.adhoc_diagnostics ? inst.adhoc_diagnostics->to_json() : "null");
  json += "\n}\n";
  {
    auto out = open_output(config, "diagnostics.json");
    out << json;
  }
  log << json;
  for (const auto& w : inst.layers.warnings) log << "warning: " << w << '\n';
  return inst;
}

SeedSelection cmd_seeds(const ExperimentConfig& config, std::ostream& log) {
  const Instance inst = load_instance(config);
  for (const auto& w : inst.layers.warnings) log << "warning: " << w << '\n';
  const LiveEdgePool live(inst.social, pool_of(config), config.workers);
  SeedSelection sel = select(inst.social, config.k, live, config);
  auto out = open_output(config, "seeds.csv");
  write_selection(out, sel, inst.social);
  log << "spread " << format_double(sel.spread()) << " lookups " << sel.lookups << '\n';
  return sel;
}

AsmtcResult cmd_agents(const ExperimentConfig& config, std::ostream& log) {
  const Instance inst = load_instance(config);
  for (const auto& w : inst.layers.warnings) log << "warning: " << w << '\n';
  const DistanceOracle oracle(inst.adhoc);
  AsmtcResult res = asmtc(inst.social, oracle, inst.mapping, config.asmtc);
  {
    auto out = open_output(config, "agents.csv");
    write_assignment(out, res.assignment, inst.social);
  }
  {
    auto out = open_output(config, "agents_ledger.csv");
    write_ledger(out, res.ledger);
  }
  log << "objective " << format_double(res.baseline_objective) << " -> "
      << format_double(res.objective) << ", delegated " << res.assignment.delegated_count()
      << ", elections " << res.das.elections.size() << ", adjustment rounds "
      << res.mor.rounds.size() << '\n';
  return res;
}

Figure parse_figure(const std::string& name) {
  if (name == "fig3") return Figure::kSpread;
  if (name == "fig4") return Figure::kControl;
  if (name == "fig5") return Figure::kAgentCount;
  if (name == "fig6") return Figure::kDegree;
  throw UsageError("unknown experiment '" + name + "' (expected fig3, fig4, fig5 or fig6)");
}

std::string figure_name(Figure figure) {
  switch (figure) {
    case Figure::kSpread:
      return "fig3";
    case Figure::kControl:
      return "fig4";
    case Figure::kAgentCount:
      return "fig5";
    case Figure::kDegree:
      return "fig6";
  }
  return "";
}

void run_experiment(Figure figure, const ExperimentConfig& config, std::ostream& csv,
                    std::ostream& log) {
  const std::size_t k_max = *std::max_element(config.sweep_k.begin(), config.sweep_k.end());

  switch (figure) {
    case Figure::kSpread: {
      // Seeds chosen before and after agents are installed. Agents only
      // carry messages, so the selections must coincide.
      const Instance inst = load_instance(config);
      const LiveEdgePool live(inst.social, pool_of(config), config.workers);
      const DistanceOracle oracle(inst.adhoc);
      const SeedSelection without = select(inst.social, k_max, live, config);
      const AsmtcResult agents = asmtc(inst.social, oracle, inst.mapping, config.asmtc);
      const SeedSelection with = select(inst.social, k_max, live, config);
      log << "agents delegated " << agents.assignment.delegated_count() << '\n';
      csv << "K,spread_without_agents,spread_with_agents\n";
      for (std::size_t k : config.sweep_k) {
        const std::span<const NodeId> a(without.seeds.data(), k);
        const std::span<const NodeId> b(with.seeds.data(), k);
        csv << k << ',' << format_double(estimate_spread(inst.social, a, live.pool(), config.workers))
            << ',' << format_double(estimate_spread(inst.social, b, live.pool(), config.workers))
            << '\n';
      }
      break;
    }
    case Figure::kControl: {
      require_generated(config, "fig4");
      csv << "n,asmtc_control_overhead,deployment_overhead_with_agents\n";
      for (std::size_t n : config.sweep_n) {
        ExperimentConfig c = config;
        c.social_gen.n = c.adhoc_gen.n = n;
        const Instance inst = load_instance(c);
        const OverheadRun run = run_overhead(inst, c, std::min(config.k, n));
        csv << n << ',' << run.agents.ledger.total() << ',' << run.with_agents.total.total() << '\n';
        log << "n=" << n << " done\n";
      }
      break;
    }
    case Figure::kAgentCount: {
      const Instance inst = load_instance(config);
      const std::size_t n = inst.social.num_nodes();
      const LiveEdgePool live(inst.social, pool_of(config), config.workers);
      const DistanceOracle oracle(inst.adhoc);
      const SeedSelection sel = select(inst.social, std::min(config.k, n), live, config);
      csv << "num_delegated_allowed,deployment_overhead\n";
      for (double f : config.sweep_delegated) {
        if (f < 0) throw DomainError("sweep.delegated fractions must be non-negative");
        ExperimentConfig c = config;
        c.asmtc.max_delegated = static_cast<std::size_t>(std::llround(f * static_cast<double>(n)));
        const AsmtcResult agents = asmtc(inst.social, oracle, inst.mapping, c.asmtc);
        const DeploymentReport rep = deploy(inst, sel, agents.assignment, oracle, live, c);
        csv << *c.asmtc.max_delegated << ',' << rep.total.total() << '\n';
      }
      break;
    }
    case Figure::kDegree: {
      require_generated(config, "fig6");
      csv << "K,avg_degree,overhead_no_agents,overhead_asmtc,reduction_pct\n";
      for (double degree : config.sweep_degree) {
        ExperimentConfig c = config;
        c.adhoc_gen.avg_degree = degree;
        c.adhoc_gen.max_degree = std::max<std::size_t>(
            c.adhoc_gen.max_degree, static_cast<std::size_t>(std::ceil(1.5 * degree)));
        const Instance inst = load_instance(c);
        const OverheadRun run = run_overhead(inst, c, k_max);
        for (std::size_t k : config.sweep_k) {
          const auto base = prefix_total(run.baseline, k).total();
          const auto with = prefix_total(run.with_agents, k).total();
          const double pct =
              base == 0 ? 0.0 : 100.0 * (static_cast<double>(base) - static_cast<double>(with)) / base;
          csv << k << ',' << format_double(degree) << ',' << base << ',' << with << ','
              << percent(pct) << '\n';
        }
        log << "degree " << format_double(degree) << " done\n";
      }
      break;
    }
  }
}

}  // namespace msnim
