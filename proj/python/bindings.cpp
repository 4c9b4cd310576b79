// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hjd/errors.hpp"
#include "hjd/experiment.hpp"
#include "hjd/hcjdi.hpp"
#include "hjd/metrics.hpp"
#include "hjd/orthogonal.hpp"
#include "oracles.hpp"

namespace py = pybind11;
using namespace hjd;

namespace {

using CArray = py::array_t<cd, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw Error(ErrorKind::invalid_input, "expected a 2-D array");
  ComplexMatrix m(a.shape(0), a.shape(1));
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

py::array_t<cd> to_array(const ComplexMatrix& m) {
  py::array_t<cd> a({m.rows(), m.cols()});
  auto w = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return a;
}

std::vector<ComplexMatrix> to_matrices(const std::vector<CArray>& v) {
  std::vector<ComplexMatrix> out;
  for (const auto& a : v) out.push_back(to_matrix(a));
  return out;
}

py::dict result_dict(const JdResult& r) {
  py::list sweeps;
  for (const auto& s : r.diagnostics.sweeps) {
    py::dict d;
    d["sweep"] = s.sweep;
    d["cost"] = s.cost;
    d["max_sin"] = s.max_sin;
    d["max_sinh"] = s.max_sinh;
    d["pi"] = s.pi ? py::object(py::float_(*s.pi)) : py::none();
    sweeps.append(d);
  }
  py::dict out;
  out["V"] = to_array(r.V);
  out["sweeps"] = sweeps;
  out["converged"] = r.diagnostics.converged;
  out["median_mismatches"] = r.diagnostics.median_mismatches;
  out["skipped_rotations"] = r.diagnostics.skipped_rotations;
  return out;
}

template <class F>
py::dict run_solver(F solver, const std::vector<CArray>& m, const std::vector<CArray>& n,
                    const SweepConfig& cfg, std::optional<CArray> mixing) {
  TargetSets sets = TargetSets::make(to_matrices(m), to_matrices(n));
  ComplexMatrix a;
  if (mixing) a = to_matrix(*mixing);
  return result_dict(solver(sets, cfg, mixing ? &a : nullptr));
}

}  // namespace

PYBIND11_MODULE(_hjd, mod) {
  mod.attr("__version__") = "0.1.0";
  py::register_exception<Error>(mod, "HjdError", PyExc_ValueError);

  py::class_<SweepConfig>(mod, "SweepConfig")
      .def(py::init<>())
      .def_readwrite("tau", &SweepConfig::tau)
      .def_readwrite("max_sweeps", &SweepConfig::max_sweeps)
      .def_readwrite("co_e2_scale", &SweepConfig::co_e2_scale)
      .def_readwrite("hcjdi_e_scale", &SweepConfig::hcjdi_e_scale)
      .def_readwrite("max_shear", &SweepConfig::max_shear);

  const auto args = [] {
    return std::make_tuple(py::arg("M"), py::arg("N") = std::vector<CArray>{},
                           py::arg("config") = SweepConfig{}, py::arg("mixing") = py::none());
  };
  auto [am, an, ac, amix] = args();
  mod.def(
      "co_hjd",
      [](const std::vector<CArray>& m, const std::vector<CArray>& n, const SweepConfig& c,
         std::optional<CArray> a) {
        return run_solver([](TargetSets& s, const SweepConfig& k, const ComplexMatrix* x) {
          return co_hjd(s, k, x);
        }, m, n, c, a);
      },
      am, an, ac, amix, "Complex orthogonal HJD. Returns V and per-sweep diagnostics.");
  mod.def(
      "ro_hjd",
      [](const std::vector<CArray>& m, const std::vector<CArray>& n, const SweepConfig& c,
         std::optional<CArray> a) {
        return run_solver([](TargetSets& s, const SweepConfig& k, const ComplexMatrix* x) {
          return ro_hjd(s, k, x);
        }, m, n, c, a);
      },
      am, an, ac, amix, "Real-rotation orthogonal HJD (needs at least one N matrix).");
  mod.def(
      "h_cjdi",
      [](const std::vector<CArray>& m, const std::vector<CArray>& n, const SweepConfig& c,
         std::optional<CArray> a) {
        return run_solver([](TargetSets& s, const SweepConfig& k, const ComplexMatrix* x) {
          return h_cjdi(s, k, x);
        }, m, n, c, a);
      },
      am, an, ac, amix, "Non-orthogonal hybrid JD with Givens and hyperbolic rotations.");

  mod.def(
      "jd_cost",
      [](const std::vector<CArray>& m, const std::vector<CArray>& n, const CArray& v) {
        return jd_cost(TargetSets::make(to_matrices(m), to_matrices(n)), to_matrix(v));
      },
      py::arg("M"), py::arg("N"), py::arg("V"));
  mod.def(
      "performance_index", [](const CArray& p) { return performance_index(to_matrix(p)); },
      py::arg("P"));
  mod.def("modulus_of_uniqueness", &modulus_of_uniqueness, py::arg("profiles"));

  mod.def("builtin_config_names", &builtin_config_names);
  mod.def(
      "run_experiment",
      [](const std::string& config, std::optional<int> trials, std::optional<std::uint64_t> seed) {
        ExperimentConfig c =
            config.find('{') != std::string::npos ? parse_config(config) : load_config(config);
        if (trials) c.trials = *trials;
        if (seed) c.seed = *seed;
        ResultTable t;
        {
          py::gil_scoped_release release;
          t = run_experiment(c);
        }
        py::dict out;
        out["results_csv"] = results_csv(t);
        out["plotdata_csv"] = plotdata_csv(t);
        out["summary_json"] = summary_json(c, t);
        return out;
      },
      py::arg("config"), py::arg("trials") = py::none(), py::arg("seed") = py::none(),
      "Run a built-in config name, a JSON file path or JSON text.");
  mod.def(
      "oracle_check",
      [](const std::string& name, std::uint64_t seed, int instances) {
        const auto r = oracle::run_check(name, seed, instances);
        return py::make_tuple(r.pass, r.detail);
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("instances") = 10);
}
