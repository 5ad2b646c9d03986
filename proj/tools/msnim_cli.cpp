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

// msnim: generate layers, pick seeds, pick agents and run the experiment
// drivers.
//
// Exit status: 0 success, 1 usage, 2 input or domain error, 3 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msnim/config.hpp"
#include "msnim/experiments.hpp"

namespace {

struct Flags {
  std::optional<std::string> config_file;
  std::optional<std::string> params_file;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<std::string> out;
  std::optional<std::string> social;
  std::optional<std::string> adhoc;
  std::optional<std::string> mapping;
  std::optional<std::size_t> k;
  std::optional<std::size_t> trials;
  std::optional<std::string> algo;
};

// Config file, then the parameter file, then --set, then dedicated flags.
msnim::ExperimentConfig build_config(const Flags& f) {
  msnim::ExperimentConfig c;
  if (f.config_file) {
    for (const auto& [k, v] : msnim::read_config_file(*f.config_file)) msnim::set_config(c, k, v);
  }
  if (f.params_file) {
    for (const auto& [k, v] : msnim::read_config_file(*f.params_file)) {
      msnim::set_asmtc_param(c.asmtc, k, v);
    }
  }
  for (const auto& s : f.sets) {
    const auto [k, v] = msnim::split_assignment(s);
    msnim::set_config(c, k, v);
  }
  if (f.seed) c.rng_seed = *f.seed;
  if (f.workers) c.workers = *f.workers;
  if (f.out) c.out_dir = *f.out;
  if (f.social) c.social_path = *f.social;
  if (f.adhoc) c.adhoc_path = *f.adhoc;
  if (f.mapping) c.mapping_path = *f.mapping;
  if (f.k) c.k = *f.k;
  if (f.trials) c.trials = *f.trials;
  if (f.algo) msnim::set_config(c, "algo", *f.algo);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seed and agent selection for mobile social networks over ad-hoc networks"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--config", f.config_file, "key = value configuration file");
  app.add_option("--params", f.params_file, "agent-selection parameter file");
  app.add_option("--set", f.sets, "override a configuration key (key=value)");
  app.add_option("--seed", f.seed, "RNG seed");
  app.add_option("--workers", f.workers, "worker threads");
  app.add_option("--out", f.out, "output directory");
  app.add_option("--social", f.social, "social edge list");
  app.add_option("--adhoc", f.adhoc, "ad-hoc edge list");
  app.add_option("--mapping", f.mapping, "social,adhoc mapping CSV");
  app.add_option("-k,--k", f.k, "seed budget");
  app.add_option("-r,--trials", f.trials, "cascade trials");

  auto* gen = app.add_subcommand("gen", "generate a layer pair and write it out");
  auto* seeds = app.add_subcommand("seeds", "select seeds and write seeds.csv");
  seeds->add_option("--algo", f.algo, "celf or greedy")->check(CLI::IsMember({"celf", "greedy"}));
  auto* agents = app.add_subcommand("agents", "select agents and write agents.csv");
  auto* experiment = app.add_subcommand("experiment", "run an experiment driver");
  std::string which;
  experiment->add_option("which", which, "fig3, fig4, fig5 or fig6")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const msnim::ExperimentConfig config = build_config(f);
    if (gen->parsed()) {
      msnim::cmd_gen(config, std::cerr);
    } else if (seeds->parsed()) {
      msnim::cmd_seeds(config, std::cerr);
    } else if (agents->parsed()) {
      msnim::cmd_agents(config, std::cerr);
    } else if (experiment->parsed()) {
      const auto figure = msnim::parse_figure(which);
      std::filesystem::create_directories(config.out_dir);
      const auto path = std::filesystem::path(config.out_dir) / (which + ".csv");
      std::ofstream csv(path);
      if (!csv) throw msnim::DomainError("cannot write " + path.string());
      msnim::run_experiment(figure, config, csv, std::cerr);
      std::cerr << "wrote " << path.string() << '\n';
    }
  } catch (const msnim::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const msnim::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const msnim::DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const msnim::InvalidLedgerError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
