// SPDX-License-Identifier: Apache-2.0
#include "hjd/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hjd/aro.hpp"
#include "hjd/errors.hpp"
#include "hjd/hcjdi.hpp"
#include "hjd/orthogonal.hpp"

namespace hjd {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct AlgoName {
  Algorithm algo;
  const char* name;
};
constexpr AlgoName kAlgorithms[] = {
    {Algorithm::co_hjd, "co-hjd"}, {Algorithm::ro_hjd, "ro-hjd"}, {Algorithm::aro_hjd, "aro-hjd"},
    {Algorithm::h_cjdi, "h-cjdi"}, {Algorithm::cjdi, "cjdi"},     {Algorithm::sobi_jd, "sobi-jd"},
};

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::config, path + ": " + msg);
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : std::string(); }

// ---- JSON readers with field paths ----

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  template <class F>
  void opt(const char* key, F&& f) {
    seen_.insert(key);
    if (j_.contains(key)) f(j_.at(key), path_ + "." + key);
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) fail(path_ + "." + it.key(), "unknown field");
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

double get_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::optional<double> get_optional_number(const json& v, const std::string& path) {
  if (v.is_null()) return std::nullopt;
  return get_number(v, path);
}

std::int64_t get_int(const json& v, const std::string& path, std::int64_t min) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < min) fail(path, "must be >= " + std::to_string(min));
  return x;
}

std::string get_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<std::size_t> get_lags(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of lags");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(static_cast<std::size_t>(get_int(v[i], path + "[" + std::to_string(i) + "]", 0)));
  return out;
}

SnrConvention get_convention(const json& v, const std::string& path) {
  const std::string s = get_string(v, path);
  if (s == "literal") return SnrConvention::literal;
  if (s == "conventional") return SnrConvention::conventional;
  fail(path, "expected \"literal\" or \"conventional\"");
}

const char* convention_name(SnrConvention c) {
  return c == SnrConvention::literal ? "literal" : "conventional";
}

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

const char* to_string(Algorithm a) noexcept {
  for (const auto& e : kAlgorithms)
    if (e.algo == a) return e.name;
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  for (const auto& e : kAlgorithms)
    if (name == e.name) return e.algo;
  throw Error(ErrorKind::config, "unknown algorithm '" + name + "'");
}

const char* to_string(Axis a) noexcept {
  switch (a) {
    case Axis::sweep: return "sweep";
    case Axis::snr: return "snr";
    case Axis::rho: return "rho";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  if (trials < 1) fail("config.trials", "must be >= 1");
  if (workers < 1) fail("config.workers", "must be >= 1");
  if (algorithms.empty()) fail("config.algorithms", "at least one algorithm is required");
  sweep.validate();
  if (kind == ScenarioKind::synthetic)
    scenario.validate();
  else
    bss.validate();
  if (axis == Axis::sweep && !axis_values.empty())
    fail("config.axis.values", "must be empty for the sweep axis");
  if (axis != Axis::sweep && axis_values.empty())
    fail("config.axis.values", "at least one value is required");
  if (axis == Axis::rho && kind != ScenarioKind::bss)
    fail("config.axis.name", "the rho axis needs a bss scenario");
  for (std::size_t i = 0; i < axis_values.size(); ++i) {
    const double v = axis_values[i];
    const std::string path = "config.axis.values[" + std::to_string(i) + "]";
    if (!std::isfinite(v)) fail(path, "must be finite");
    if (axis == Axis::rho && !(v >= 0.0 && v <= 1.0)) fail(path, "rho must be in [0, 1]");
  }
  for (auto a : algorithms) {
    const bool needs_n = a == Algorithm::ro_hjd;
    const std::size_t k2 = kind == ScenarioKind::synthetic ? scenario.K2 : bss.lags_N.size();
    const std::size_t k1 = kind == ScenarioKind::synthetic ? scenario.K1 : bss.lags_M.size();
    if (needs_n && k2 == 0) fail("config.algorithms", "ro-hjd needs at least one N matrix");
    if ((a == Algorithm::sobi_jd || a == Algorithm::cjdi) && k1 == 0)
      fail("config.algorithms", std::string(to_string(a)) + " needs at least one M matrix");
    if (a == Algorithm::aro_hjd && kind == ScenarioKind::bss && bss.lags_M.empty())
      fail("config.algorithms", "aro-hjd needs bss.lags_M");
  }
}

ExperimentConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("config", std::string("invalid JSON: ") + e.what());
  }
  ExperimentConfig c;
  Reader r(root, "config");
  r.opt("name", [&](const json& v, const std::string& p) { c.name = get_string(v, p); });
  r.opt("kind", [&](const json& v, const std::string& p) {
    const std::string s = get_string(v, p);
    if (s == "synthetic")
      c.kind = ScenarioKind::synthetic;
    else if (s == "bss")
      c.kind = ScenarioKind::bss;
    else
      fail(p, "expected \"synthetic\" or \"bss\"");
  });
  r.opt("trials", [&](const json& v, const std::string& p) { c.trials = static_cast<int>(get_int(v, p, 1)); });
  r.opt("seed", [&](const json& v, const std::string& p) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      fail(p, "expected a non-negative integer");
    c.seed = v.get<std::uint64_t>();
  });
  r.opt("workers", [&](const json& v, const std::string& p) { c.workers = static_cast<int>(get_int(v, p, 1)); });
  r.opt("algorithms", [&](const json& v, const std::string& p) {
    if (!v.is_array()) fail(p, "expected an array of algorithm names");
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string ip = p + "[" + std::to_string(i) + "]";
      try {
        c.algorithms.push_back(parse_algorithm(get_string(v[i], ip)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::config) throw;
        fail(ip, e.what());
      }
    }
  });
  r.opt("scenario", [&](const json& v, const std::string& p) {
    Reader s(v, p);
    auto& sc = c.scenario;
    s.opt("n", [&](const json& x, const std::string& q) { sc.n = get_int(x, q, 2); });
    s.opt("K1", [&](const json& x, const std::string& q) { sc.K1 = get_int(x, q, 0); });
    s.opt("K2", [&](const json& x, const std::string& q) { sc.K2 = get_int(x, q, 0); });
    s.opt("cond_target", [&](const json& x, const std::string& q) { sc.cond_target = get_optional_number(x, q); });
    s.opt("snr_db", [&](const json& x, const std::string& q) { sc.snr_db = get_optional_number(x, q); });
    s.opt("mou_target", [&](const json& x, const std::string& q) { sc.mou_target = get_optional_number(x, q); });
    s.opt("snr_convention", [&](const json& x, const std::string& q) { sc.snr_convention = get_convention(x, q); });
    s.finish();
  });
  r.opt("bss", [&](const json& v, const std::string& p) {
    Reader s(v, p);
    auto& b = c.bss;
    s.opt("m", [&](const json& x, const std::string& q) { b.m = get_int(x, q, 1); });
    s.opt("n", [&](const json& x, const std::string& q) { b.n = get_int(x, q, 2); });
    s.opt("T", [&](const json& x, const std::string& q) { b.T = get_int(x, q, 2); });
    s.opt("rho", [&](const json& x, const std::string& q) { b.rho = get_number(x, q); });
    s.opt("coupling", [&](const json& x, const std::string& q) { b.coupling = get_number(x, q); });
    s.opt("snr_db", [&](const json& x, const std::string& q) { b.snr_db = get_optional_number(x, q); });
    s.opt("snr_convention", [&](const json& x, const std::string& q) { b.snr_convention = get_convention(x, q); });
    s.opt("burn_in", [&](const json& x, const std::string& q) { b.burn_in = get_int(x, q, 0); });
    s.opt("lags_M", [&](const json& x, const std::string& q) { b.lags_M = get_lags(x, q); });
    s.opt("lags_N", [&](const json& x, const std::string& q) { b.lags_N = get_lags(x, q); });
    s.opt("innovation", [&](const json& x, const std::string& q) {
      const std::string t = get_string(x, q);
      if (t == "C1")
        b.innovation = Innovation::C1;
      else if (t == "C2")
        b.innovation = Innovation::C2;
      else
        fail(q, "expected \"C1\" or \"C2\"");
    });
    s.opt("noise", [&](const json& x, const std::string& q) {
      const std::string t = get_string(x, q);
      if (t == "white")
        b.noise = NoiseKind::white;
      else if (t == "colored")
        b.noise = NoiseKind::colored;
      else
        fail(q, "expected \"white\" or \"colored\"");
    });
    s.opt("ar_coeffs", [&](const json& x, const std::string& q) {
      if (!x.is_array()) fail(q, "expected an array of [re, im] pairs");
      b.ar_coeffs.clear();
      for (std::size_t i = 0; i < x.size(); ++i) {
        const std::string ip = q + "[" + std::to_string(i) + "]";
        if (!x[i].is_array() || x[i].size() != 2) fail(ip, "expected [re, im]");
        b.ar_coeffs.emplace_back(get_number(x[i][0], ip + "[0]"), get_number(x[i][1], ip + "[1]"));
      }
    });
    s.finish();
  });
  r.opt("sweep", [&](const json& v, const std::string& p) {
    Reader s(v, p);
    auto& sw = c.sweep;
    s.opt("tau", [&](const json& x, const std::string& q) { sw.tau = get_number(x, q); });
    s.opt("max_sweeps", [&](const json& x, const std::string& q) { sw.max_sweeps = static_cast<int>(get_int(x, q, 1)); });
    s.opt("co_e2_scale", [&](const json& x, const std::string& q) { sw.co_e2_scale = get_number(x, q); });
    s.opt("hcjdi_e_scale", [&](const json& x, const std::string& q) { sw.hcjdi_e_scale = get_number(x, q); });
    s.opt("max_shear", [&](const json& x, const std::string& q) { sw.max_shear = get_number(x, q); });
    s.finish();
  });
  r.opt("axis", [&](const json& v, const std::string& p) {
    Reader s(v, p);
    s.opt("name", [&](const json& x, const std::string& q) {
      const std::string t = get_string(x, q);
      if (t == "sweep")
        c.axis = Axis::sweep;
      else if (t == "snr")
        c.axis = Axis::snr;
      else if (t == "rho")
        c.axis = Axis::rho;
      else
        fail(q, "expected \"sweep\", \"snr\" or \"rho\"");
    });
    s.opt("values", [&](const json& x, const std::string& q) {
      if (!x.is_array()) fail(q, "expected an array of numbers");
      c.axis_values.clear();
      for (std::size_t i = 0; i < x.size(); ++i)
        c.axis_values.push_back(get_number(x[i], q + "[" + std::to_string(i) + "]"));
    });
    s.finish();
  });
  r.finish();
  c.validate();
  return c;
}

namespace {

json config_json(const ExperimentConfig& c) {
  json j;
  j["name"] = c.name;
  j["kind"] = c.kind == ScenarioKind::synthetic ? "synthetic" : "bss";
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["workers"] = c.workers;
  json algos = json::array();
  for (auto a : c.algorithms) algos.push_back(to_string(a));
  j["algorithms"] = algos;
  j["scenario"] = {{"n", c.scenario.n},
                   {"K1", c.scenario.K1},
                   {"K2", c.scenario.K2},
                   {"cond_target", optional_json(c.scenario.cond_target)},
                   {"snr_db", optional_json(c.scenario.snr_db)},
                   {"mou_target", optional_json(c.scenario.mou_target)},
                   {"snr_convention", convention_name(c.scenario.snr_convention)}};
  json coeffs = json::array();
  for (const auto& a : c.bss.ar_coeffs) coeffs.push_back({a.real(), a.imag()});
  j["bss"] = {{"m", c.bss.m},
              {"n", c.bss.n},
              {"T", c.bss.T},
              {"ar_coeffs", coeffs},
              {"rho", c.bss.rho},
              {"innovation", c.bss.innovation == Innovation::C1 ? "C1" : "C2"},
              {"noise", c.bss.noise == NoiseKind::white ? "white" : "colored"},
              {"coupling", c.bss.coupling},
              {"snr_db", optional_json(c.bss.snr_db)},
              {"snr_convention", convention_name(c.bss.snr_convention)},
              {"lags_M", c.bss.lags_M},
              {"lags_N", c.bss.lags_N},
              {"burn_in", c.bss.burn_in}};
  j["sweep"] = {{"tau", c.sweep.tau},
                {"max_sweeps", c.sweep.max_sweeps},
                {"co_e2_scale", c.sweep.co_e2_scale},
                {"hcjdi_e_scale", c.sweep.hcjdi_e_scale},
                {"max_shear", c.sweep.max_shear}};
  j["axis"] = {{"name", to_string(c.axis)}, {"values", c.axis_values}};
  return j;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& config, int indent) {
  return config_json(config).dump(indent);
}

std::vector<std::string> builtin_config_names() {
  return {"fig1-small", "fig1-large", "fig2-small", "fig2-large", "fig3", "fig4a", "fig4b"};
}

ExperimentConfig builtin_config(const std::string& name) {
  ExperimentConfig c;
  c.name = name;
  c.seed = 20170801;
  if (name == "fig1-small" || name == "fig1-large") {
    const bool large = name == "fig1-large";
    c.kind = ScenarioKind::synthetic;
    c.scenario.n = large ? 50 : 5;
    c.scenario.cond_target = 200.0;
    c.algorithms = {Algorithm::cjdi, Algorithm::h_cjdi};
    c.trials = large ? 20 : 100;
    c.sweep.max_sweeps = large ? 60 : 100;
  } else if (name == "fig2-small" || name == "fig2-large") {
    const bool large = name == "fig2-large";
    c.kind = ScenarioKind::synthetic;
    c.scenario.n = large ? 50 : 5;
    c.scenario.snr_db = 30.0;
    c.scenario.mou_target = 1.0 - 1e-6;
    c.algorithms = {Algorithm::cjdi, Algorithm::h_cjdi};
    c.trials = large ? 20 : 100;
    c.sweep.max_sweeps = large ? 40 : 100;
  } else if (name == "fig3") {
    c.kind = ScenarioKind::bss;
    c.bss.noise = NoiseKind::white;
    c.bss.snr_db = 20.0;
    c.algorithms = {Algorithm::co_hjd, Algorithm::ro_hjd, Algorithm::aro_hjd};
    c.trials = 20;
    c.axis = Axis::rho;
    c.axis_values = {0.1, 0.9};
  } else if (name == "fig4a" || name == "fig4b") {
    c.kind = ScenarioKind::bss;
    c.bss.noise = name == "fig4a" ? NoiseKind::white : NoiseKind::colored;
    c.bss.snr_db = 0.0;
    c.algorithms = {Algorithm::co_hjd, Algorithm::sobi_jd, Algorithm::h_cjdi};
    c.trials = 20;
    c.axis = Axis::snr;
    c.axis_values = {0.0};
  } else {
    throw Error(ErrorKind::config, "unknown built-in config '" + name + "'");
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& name_or_path) {
  const auto names = builtin_config_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end())
    return builtin_config(name_or_path);
  std::ifstream in(name_or_path);
  if (!in)
    throw Error(ErrorKind::config,
                "config '" + name_or_path + "' is neither a built-in name nor a readable file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

double median(std::vector<double> v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](double x) { return std::isnan(x); }), v.end());
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

namespace {

struct TrialOutput {
  std::vector<ResultRow> rows;
  std::vector<TimingRow> timings;
  std::vector<FailureRecord> failures;
};

void append_trace(TrialOutput& out, const Diagnostics& d, double axis_value, Algorithm a, int trial) {
  for (const auto& s : d.sweeps) {
    ResultRow r;
    r.axis_value = axis_value;
    r.algorithm = a;
    r.trial = trial;
    r.sweep = s.sweep;
    r.pi = s.pi;
    r.cost = s.cost;
    r.max_sin = s.max_sin;
    r.max_sinh = s.max_sinh;
    r.converged = d.converged;
    out.rows.push_back(r);
  }
}

TargetSets without_n(const TargetSets& s) {
  TargetSets t = s;
  t.N.clear();
  return t;
}

TrialOutput run_trial(const ExperimentConfig& c, double axis_value, int trial) {
  TrialOutput out;
  const std::uint64_t trial_seed = derive_seed(c.seed, static_cast<std::uint64_t>(trial));
  Rng rng(trial_seed);

  ScenarioSpec spec = c.scenario;
  BssSpec bss = c.bss;
  if (c.axis == Axis::snr) {
    spec.snr_db = axis_value;
    bss.snr_db = axis_value;
  } else if (c.axis == Axis::rho) {
    bss.rho = axis_value;
  }

  TargetSets sets;
  ComplexMatrix mixing;
  ComplexMatrix base_a;  // complex mixing used for the augmented problem
  try {
    if (c.kind == ScenarioKind::synthetic) {
      Problem prob = gen_problem(spec, rng);
      sets = std::move(prob.sets);
      mixing = prob.truth.A;
      base_a = mixing;
    } else {
      base_a = random_gaussian(bss.m, bss.n, rng);
      BssProblem prob = gen_bss_problem(bss, base_a, rng);
      sets = std::move(prob.sets);
      mixing = prob.WA;
    }
  } catch (const Error& e) {
    for (auto a : c.algorithms) {
      ResultRow r;
      r.axis_value = axis_value;
      r.algorithm = a;
      r.trial = trial;
      out.rows.push_back(r);
      out.failures.push_back({axis_value, a, trial, std::string("scenario: ") + e.what()});
    }
    return out;
  }

  for (auto a : c.algorithms) {
    const auto start = std::chrono::steady_clock::now();
    try {
      Diagnostics diag;
      switch (a) {
        case Algorithm::co_hjd: {
          TargetSets copy = sets;
          diag = co_hjd(copy, c.sweep, &mixing).diagnostics;
          break;
        }
        case Algorithm::sobi_jd: {
          TargetSets copy = without_n(sets);
          diag = co_hjd(copy, c.sweep, &mixing).diagnostics;
          break;
        }
        case Algorithm::ro_hjd: {
          TargetSets copy = sets;
          diag = ro_hjd(copy, c.sweep, &mixing).diagnostics;
          break;
        }
        case Algorithm::h_cjdi:
          diag = h_cjdi(sets, c.sweep, &mixing).diagnostics;
          break;
        case Algorithm::cjdi:
          diag = h_cjdi(without_n(sets), c.sweep, &mixing).diagnostics;
          break;
        case Algorithm::aro_hjd: {
          Rng aro_rng(derive_seed(trial_seed, 1));
          if (c.kind == ScenarioKind::synthetic) {
            AugmentedProblem ap = gen_augmented_problem(spec, base_a, aro_rng);
            diag = aro_hjd(ap.set, c.sweep, &ap.mixing).diagnostics;
          } else {
            BssAugmented ap = gen_bss_augmented(bss, base_a, aro_rng);
            diag = aro_hjd(ap.set, c.sweep, &ap.mixing).diagnostics;
          }
          break;
        }
      }
      append_trace(out, diag, axis_value, a, trial);
    } catch (const DivergenceError& e) {
      append_trace(out, e.diagnostics(), axis_value, a, trial);
      for (auto it = out.rows.rbegin(); it != out.rows.rend() && it->algorithm == a; ++it)
        it->converged = false;
      out.failures.push_back({axis_value, a, trial, e.what()});
    } catch (const Error& e) {
      ResultRow r;
      r.axis_value = axis_value;
      r.algorithm = a;
      r.trial = trial;
      out.rows.push_back(r);
      out.failures.push_back({axis_value, a, trial, e.what()});
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.timings.push_back({axis_value, a, trial, secs});
  }
  return out;
}

}  // namespace

ResultTable run_experiment(const ExperimentConfig& c) {
  c.validate();
  const std::vector<double> points = c.axis == Axis::sweep ? std::vector<double>{0.0} : c.axis_values;
  const std::size_t jobs = points.size() * static_cast<std::size_t>(c.trials);
  std::vector<TrialOutput> outputs(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t point = job / static_cast<std::size_t>(c.trials);
      const int trial = static_cast<int>(job % static_cast<std::size_t>(c.trials));
      outputs[job] = run_trial(c, points[point], trial);
    }
  };
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(c.workers), jobs);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ResultTable table;
  table.axis = c.axis;
  for (auto& o : outputs) {
    table.rows.insert(table.rows.end(), o.rows.begin(), o.rows.end());
    table.timings.insert(table.timings.end(), o.timings.begin(), o.timings.end());
    table.failures.insert(table.failures.end(), o.failures.begin(), o.failures.end());
  }
  return table;
}

std::string results_csv(const ResultTable& t) {
  std::string s = "axis_value,algorithm,trial,sweep,pi,cost,max_sin,max_sinh,converged\r\n";
  for (const auto& r : t.rows) {
    s += (t.axis == Axis::sweep ? std::string() : fmt(r.axis_value)) + ',';
    s += std::string(to_string(r.algorithm)) + ',' + std::to_string(r.trial) + ',' +
         std::to_string(r.sweep) + ',' + fmt(r.pi) + ',' + fmt(r.cost) + ',' + fmt(r.max_sin) +
         ',' + fmt(r.max_sinh) + ',' + (r.converged ? "true" : "false") + "\r\n";
  }
  return s;
}

std::string timings_csv(const ResultTable& t) {
  std::string s = "axis_value,algorithm,trial,seconds\r\n";
  for (const auto& r : t.timings)
    s += (t.axis == Axis::sweep ? std::string() : fmt(r.axis_value)) + ',' +
         to_string(r.algorithm) + ',' + std::to_string(r.trial) + ',' + fmt(r.seconds) + "\r\n";
  return s;
}

namespace {

std::vector<Algorithm> algorithms_in(const ResultTable& t) {
  std::vector<Algorithm> out;
  for (const auto& r : t.rows)
    if (std::find(out.begin(), out.end(), r.algorithm) == out.end()) out.push_back(r.algorithm);
  return out;
}

std::vector<double> points_in(const ResultTable& t) {
  std::vector<double> out;
  for (const auto& r : t.rows)
    if (std::find(out.begin(), out.end(), r.axis_value) == out.end()) out.push_back(r.axis_value);
  return out;
}

// Final PI of every (trial) run for one algorithm at one axis point.
std::vector<double> final_pis(const ResultTable& t, Algorithm a, double point) {
  std::map<int, double> last;
  for (const auto& r : t.rows)
    if (r.algorithm == a && r.axis_value == point) last[r.trial] = r.pi.value_or(std::nan(""));
  std::vector<double> out;
  for (const auto& [trial, pi] : last) out.push_back(pi);
  return out;
}

}  // namespace

std::string plotdata_csv(const ResultTable& t) {
  const auto algos = algorithms_in(t);
  std::string s = to_string(t.axis);
  for (auto a : algos) s += std::string(",") + to_string(a);
  s += "\r\n";
  if (t.rows.empty()) return s;

  if (t.axis == Axis::sweep) {
    // traces[a][trial] = PI per sweep index
    std::map<Algorithm, std::map<int, std::vector<double>>> traces;
    int max_sweep = 0;
    for (const auto& r : t.rows) {
      auto& tr = traces[r.algorithm][r.trial];
      if (static_cast<int>(tr.size()) <= r.sweep) tr.resize(r.sweep + 1, std::nan(""));
      tr[r.sweep] = r.pi.value_or(std::nan(""));
      max_sweep = std::max(max_sweep, r.sweep);
    }
    for (int k = 0; k <= max_sweep; ++k) {
      s += std::to_string(k);
      for (auto a : algos) {
        std::vector<double> vals;
        for (const auto& [trial, tr] : traces[a])
          vals.push_back(k < static_cast<int>(tr.size()) ? tr[k] : tr.back());
        s += ',' + fmt(median(vals));
      }
      s += "\r\n";
    }
    return s;
  }
  for (double p : points_in(t)) {
    s += fmt(p);
    for (auto a : algos) s += ',' + fmt(median(final_pis(t, a, p)));
    s += "\r\n";
  }
  return s;
}

std::string summary_json(const ExperimentConfig& c, const ResultTable& t) {
  json j;
  j["config"] = config_json(c);
  j["versions"] = {{"hjd", kVersion},
                   {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
                   {"compiler", __VERSION__}};
  json results = json::array();
  for (double p : points_in(t)) {
    for (auto a : algorithms_in(t)) {
      const auto pis = final_pis(t, a, p);
      int converged = 0;
      std::map<int, bool> conv;
      for (const auto& r : t.rows)
        if (r.algorithm == a && r.axis_value == p) conv[r.trial] = r.converged;
      for (const auto& [trial, ok] : conv) converged += ok ? 1 : 0;
      const double med = median(pis);
      json e = {{"algorithm", to_string(a)},
                {"median_final_pi", std::isnan(med) ? json(nullptr) : json(med)},
                {"trials", conv.size()},
                {"converged", converged}};
      if (t.axis != Axis::sweep) e[to_string(t.axis)] = p;
      results.push_back(e);
    }
  }
  j["results"] = results;
  json failures = json::array();
  for (const auto& f : t.failures) {
    json e = {{"algorithm", to_string(f.algorithm)}, {"trial", f.trial}, {"message", f.message}};
    if (t.axis != Axis::sweep) e[to_string(t.axis)] = f.axis_value;
    failures.push_back(e);
  }
  j["failures"] = failures;
  return j.dump(2) + "\n";
}

void write_outputs(const ExperimentConfig& c, const ResultTable& t, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& body) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::config, "cannot write " + path.string());
    out << body;
  };
  write("results.csv", results_csv(t));
  write("timings.csv", timings_csv(t));
  write("plotdata.csv", plotdata_csv(t));
  write("summary.json", summary_json(c, t));
}

}  // namespace hjd
