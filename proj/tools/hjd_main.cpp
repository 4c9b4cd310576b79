// SPDX-License-Identifier: Apache-2.0
// hjd command-line tool: run campaigns, list built-in configs, run oracles.
#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "hjd/errors.hpp"
#include "hjd/experiment.hpp"
#include "oracles.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hybrid joint diagonalization toolkit"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a Monte Carlo campaign");
  std::string config_name;
  std::optional<int> trials, workers;
  std::optional<std::uint64_t> seed;
  std::string out = "out";
  run->add_option("--config", config_name, "built-in config name or JSON file")->required();
  run->add_option("--trials", trials, "override trial count");
  run->add_option("--seed", seed, "override master seed");
  run->add_option("--out", out, "output directory");
  run->add_option("--workers", workers, "worker threads");

  auto* list = app.add_subcommand("list-configs", "list built-in configs");

  auto* oracle = app.add_subcommand("oracle", "run a brute-force oracle check");
  std::string op;
  std::uint64_t oracle_seed = 1;
  int instances = 0;
  oracle->add_option("op", op, "check name, or 'all'")->required();
  oracle->add_option("--seed", oracle_seed, "rng seed");
  oracle->add_option("--instances", instances, "instance count (default per check)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& name : hjd::builtin_config_names()) std::cout << name << '\n';
      return 0;
    }
    if (*run) {
      hjd::ExperimentConfig cfg = hjd::load_config(config_name);
      if (trials) cfg.trials = *trials;
      if (seed) cfg.seed = *seed;
      if (workers) cfg.workers = *workers;
      cfg.validate();
      const hjd::ResultTable table = hjd::run_experiment(cfg);
      std::filesystem::create_directories(out);
      hjd::write_outputs(cfg, table, out);
      std::cout << "wrote " << table.rows.size() << " rows to " << out;
      if (!table.failures.empty()) std::cout << " (" << table.failures.size() << " failed runs)";
      std::cout << '\n';
      return 0;
    }
    if (*oracle) {
      const auto names = op == "all" ? hjd::oracle::check_names() : std::vector<std::string>{op};
      bool ok = true;
      for (const auto& name : names) {
        int count = instances;
        if (count <= 0) count = name == "metrics" ? 1000 : name == "hcjdi-grid" || name == "co-grid" ? 200
                              : name == "lemma1" ? 100 : 50;
        const auto r = hjd::oracle::run_check(name, oracle_seed, count);
        std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << '\n';
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const hjd::Error& e) {
    std::cerr << "error (" << hjd::to_string(e.kind()) << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
