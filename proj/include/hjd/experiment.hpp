// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo campaigns over algorithms and scenarios, with CSV/JSON output.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hjd/scenarios.hpp"
#include "hjd/sets.hpp"

namespace hjd {

enum class Algorithm { co_hjd, ro_hjd, aro_hjd, h_cjdi, cjdi, sobi_jd };

const char* to_string(Algorithm a) noexcept;
Algorithm parse_algorithm(const std::string& name);

enum class ScenarioKind { synthetic, bss };
enum class Axis { sweep, snr, rho };

const char* to_string(Axis a) noexcept;

struct ExperimentConfig {
  std::string name = "custom";
  ScenarioKind kind = ScenarioKind::synthetic;
  ScenarioSpec scenario;
  BssSpec bss;
  std::vector<Algorithm> algorithms;
  int trials = 1;
  std::uint64_t seed = 0;
  int workers = 1;
  SweepConfig sweep;
  Axis axis = Axis::sweep;
  std::vector<double> axis_values;  // snr or rho points; empty for the sweep axis

  void validate() const;
};

/// Parses JSON text. Errors are Error(config) naming the offending field
/// path, e.g. "config.scenario.n: expected a positive integer".
ExperimentConfig parse_config(const std::string& json_text);
std::string config_to_json(const ExperimentConfig& config, int indent = 2);

std::vector<std::string> builtin_config_names();
/// Built-in config by name; throws Error(config) for unknown names.
ExperimentConfig builtin_config(const std::string& name);
/// A built-in name or a path to a JSON file.
ExperimentConfig load_config(const std::string& name_or_path);

struct ResultRow {
  double axis_value = 0;  // unused for the sweep axis
  Algorithm algorithm = Algorithm::co_hjd;
  int trial = 0;
  int sweep = 0;
  std::optional<double> pi;
  std::optional<double> cost;
  double max_sin = 0;
  double max_sinh = 0;
  bool converged = false;
};

struct TimingRow {
  double axis_value = 0;
  Algorithm algorithm = Algorithm::co_hjd;
  int trial = 0;
  double seconds = 0;
};

struct FailureRecord {
  double axis_value = 0;
  Algorithm algorithm = Algorithm::co_hjd;
  int trial = 0;
  std::string message;
};

struct ResultTable {
  Axis axis = Axis::sweep;
  std::vector<ResultRow> rows;  // ordered by (axis value, trial, algorithm, sweep)
  std::vector<TimingRow> timings;
  std::vector<FailureRecord> failures;
};

/// Runs every trial; a failing algorithm run is recorded as a single
/// converged=false row and never aborts the campaign.
ResultTable run_experiment(const ExperimentConfig& config);

std::string results_csv(const ResultTable& table);
std::string timings_csv(const ResultTable& table);
/// Sweep axis: median PI per sweep per algorithm (traces that stopped early
/// hold their final value). snr/rho axis: median final PI per point.
std::string plotdata_csv(const ResultTable& table);
std::string summary_json(const ExperimentConfig& config, const ResultTable& table);

/// Writes results.csv, timings.csv, plotdata.csv and summary.json into dir.
void write_outputs(const ExperimentConfig& config, const ResultTable& table,
                   const std::string& dir);

double median(std::vector<double> values);

}  // namespace hjd
