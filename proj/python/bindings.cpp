// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "spincorr/bethe.hpp"
#include "spincorr/closedform.hpp"
#include "spincorr/correlator.hpp"
#include "spincorr/eigensolver.hpp"
#include "spincorr/errors.hpp"
#include "spincorr/hamiltonian.hpp"
#include "spincorr/hierarchy.hpp"
#include "spincorr/scaling.hpp"

namespace py = pybind11;
using namespace spincorr;

namespace {

SignPattern parse_pattern(const std::string& ops, int start_site) {
  if (ops.empty()) throw ArgumentError("pattern must contain at least one operator");
  SignPattern p;
  p.start_site = start_site;
  for (char c : ops) {
    if (c == '+') {
      p.ops.push_back(Ladder::Raise);
    } else if (c == '-') {
      p.ops.push_back(Ladder::Lower);
    } else {
      throw ArgumentError("pattern characters must be '+' or '-'");
    }
  }
  return p;
}

py::array_t<std::complex<double>> amplitudes_of(const PureState& st) {
  py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(st.dimension()));
  std::copy(st.amplitudes.begin(), st.amplitudes.end(), out.mutable_data());
  return out;
}

py::array_t<double> to_numpy(const Eigen::MatrixXd& m) {
  py::array_t<double> out({m.rows(), m.cols()});
  auto r = out.mutable_unchecked<2>();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_spincorr, m) {
  m.doc() = "Formation-probability correlators and correlation-depth certificates";

  static py::exception<CapacityError> capacity(m, "CapacityError", PyExc_ValueError);
  static py::exception<DomainError> domain(m, "DomainError", PyExc_ValueError);
  static py::exception<ConvergenceError> convergence(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConvergenceError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(convergence.ptr())(e.what());
      exc.attr("best_residual") = e.best_residual();
      PyErr_SetObject(convergence.ptr(), exc.ptr());
    } catch (const CapacityError& e) {
      py::set_error(capacity, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    }
  });

  // hamiltonian
  py::class_<ChainSpec>(m, "ChainSpec").def_readonly("n_sites", &ChainSpec::n_sites);
  m.def("ising_chain", &ising_chain, py::arg("n_sites"), py::arg("g"), py::arg("k_next") = 0.0);
  m.def("xxz_chain", &xxz_chain, py::arg("n_sites"), py::arg("delta"));
  m.def("majumdar_ghosh_chain", &majumdar_ghosh_chain, py::arg("n_sites"));

  py::class_<LinearOperator>(m, "LinearOperator")
      .def_property_readonly("dimension", &LinearOperator::dimension)
      .def_property_readonly("n_sites", &LinearOperator::n_sites)
      .def_property_readonly("conserves_magnetization", &LinearOperator::conserves_magnetization)
      .def_property_readonly("sector_n_up",
                             [](const LinearOperator& op) -> std::optional<int> {
                               if (op.sector()) return op.sector()->n_up();
                               return std::nullopt;
                             })
      .def("config_at", &LinearOperator::config_at)
      .def("apply",
           [](const LinearOperator& op, py::array_t<double, py::array::c_style | py::array::forcecast> v) {
             if (v.ndim() != 1) throw ArgumentError("apply expects a 1-d vector");
             py::array_t<double> out(v.shape(0));
             op.apply(std::span<const double>(v.data(), static_cast<std::size_t>(v.shape(0))),
                      std::span<double>(out.mutable_data(), static_cast<std::size_t>(v.shape(0))));
             return out;
           })
      .def("dense_matrix", [](const LinearOperator& op) { return to_numpy(dense_matrix(op)); });
  m.def("build", &build, py::arg("spec"), py::arg("n_up") = py::none());

  // eigensolver
  py::class_<PureState>(m, "PureState")
      .def_readonly("n_sites", &PureState::n_sites)
      .def_readonly("energy", &PureState::energy)
      .def_readonly("degenerate", &PureState::degenerate)
      .def_readonly("gap", &PureState::gap)
      .def_readonly("matvecs", &PureState::matvecs)
      .def_property_readonly("amplitudes", &amplitudes_of)
      .def_property_readonly("sector_n_up",
                             [](const PureState& st) -> std::optional<int> {
                               if (st.sector) return st.sector->n_up();
                               return std::nullopt;
                             })
      .def("config_at", &PureState::config_at)
      .def("norm", &PureState::norm);
  m.def("make_state",
        [](int n, py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast> a) {
          return make_state(n, std::vector<std::complex<double>>(a.data(), a.data() + a.size()));
        },
        py::arg("n_sites"), py::arg("amplitudes"));
  m.def("ground_state",
        [](const LinearOperator& op, double tol, std::uint64_t seed, bool check_degeneracy) {
          LanczosOptions o;
          o.tol = tol;
          o.seed = seed;
          o.check_degeneracy = check_degeneracy;
          py::gil_scoped_release release;
          return ground_state(op, o);
        },
        py::arg("op"), py::arg("tol") = 1e-10, py::arg("seed") = kDefaultSeed,
        py::arg("check_degeneracy") = true);
  m.def("spectrum", [](const LinearOperator& op) {
    const auto s = full_spectrum(op);
    return py::make_tuple(to_numpy(s.eigenvalues), to_numpy(s.eigenvectors));
  });
  m.def("thermal_correlator",
        [](const LinearOperator& op, double beta, const std::string& ops, int start_site) {
          const auto s = full_spectrum(op);
          return thermal_correlator(s, thermal_weights(s, beta), parse_pattern(ops, start_site))
              .e_value;
        },
        py::arg("op"), py::arg("beta"), py::arg("pattern"), py::arg("start_site") = 1);

  // correlator
  m.def("correlator",
        [](const PureState& st, const std::string& ops, int start_site) {
          const auto r = pure_correlator(st, parse_pattern(ops, start_site));
          return py::make_tuple(r.c_value, r.e_value);
        },
        py::arg("state"), py::arg("pattern"), py::arg("start_site") = 1,
        "Return (C_m, E_m) for a pattern string such as '+-+-'.");
  m.def("alternating_pattern", [](int m_order) { return to_string(alternating_pattern(m_order)); });
  m.def("best_pattern", [](const PureState& st, int m_order) {
    return to_string(best_pattern(st, m_order));
  });

  // hierarchy
  m.def("entanglement_bound", &entanglement_bound, py::arg("n"), py::arg("k"));
  m.def("nonlocality_bound", &nonlocality_bound, py::arg("n"), py::arg("k"));
  py::class_<DepthCertificate>(m, "DepthCertificate")
      .def_readonly("e_value", &DepthCertificate::e_value)
      .def_readonly("n_sites", &DepthCertificate::n_sites)
      .def_readonly("ent_depth", &DepthCertificate::ent_depth)
      .def_readonly("nl_depth", &DepthCertificate::nl_depth)
      .def_readonly("unexplainable", &DepthCertificate::unexplainable)
      .def_property_readonly("ent_ladder",
                             [](const DepthCertificate& c) {
                               std::vector<double> v;
                               for (const auto& s : c.ent_ladder) v.push_back(s.threshold);
                               return v;
                             })
      .def_property_readonly("nl_ladder", [](const DepthCertificate& c) {
        std::vector<double> v;
        for (const auto& s : c.nl_ladder) v.push_back(s.threshold);
        return v;
      });
  m.def("certify", &certify, py::arg("e_value"), py::arg("n"));

  // bethe
  py::class_<bethe::BetheState>(m, "BetheState")
      .def_readonly("n_sites", &bethe::BetheState::n_sites)
      .def_readonly("m_down", &bethe::BetheState::m_down)
      .def_readonly("delta", &bethe::BetheState::delta)
      .def_readonly("eta", &bethe::BetheState::eta)
      .def_readonly("quantum_numbers", &bethe::BetheState::quantum_numbers)
      .def_readonly("roots", &bethe::BetheState::roots)
      .def_readonly("gaudin_norm_sq", &bethe::BetheState::gaudin_norm_sq)
      .def_readonly("residual", &bethe::BetheState::residual)
      .def_property_readonly("energy", &bethe::BetheState::energy);
  m.def("bethe_ground", [](int n, double delta) { return bethe::solve_ground(n, delta); },
        py::arg("n"), py::arg("delta"));
  m.def("bethe_e_n", &bethe::e_n);
  m.def("bethe_e_n_minus_2", &bethe::e_n_minus_2);
  m.def("bethe_state", &bethe::to_state);

  // closed forms
  m.def("xxz4_thermal",
        [](double delta, double beta, const std::string& formula) {
          if (formula != "spectral" && formula != "printed") {
            throw ArgumentError("formula must be 'spectral' or 'printed'");
          }
          return xxz4_thermal(delta, beta,
                              formula == "printed" ? Xxz4Formula::Printed : Xxz4Formula::Spectral);
        },
        py::arg("delta"), py::arg("beta"), py::arg("formula") = "spectral");
  m.def("xxz4_zero_t", &xxz4_zero_t, py::arg("delta"));
  m.def("mg_e_n", &mg_e_n, py::arg("n"));
  m.def("mg_e_n_minus_2", &mg_e_n_minus_2, py::arg("n"));

  // scaling
  m.def("sweep",
        [](double k, int n, const std::vector<double>& grid, int workers) {
          SweepOptions o;
          o.workers = workers;
          py::gil_scoped_release release;
          return sweep(k, n, grid, o).e_values;
        },
        py::arg("k_next"), py::arg("n"), py::arg("g_grid"), py::arg("workers") = 0);
  m.def("locate_peak",
        [](double k, int n, int coarse_points, double g_min, double g_max) {
          PeakSearch s;
          s.coarse_points = coarse_points;
          s.g_min = g_min;
          s.g_max = g_max;
          py::gil_scoped_release release;
          return locate_peak(k, n, s).g_star;
        },
        py::arg("k_next"), py::arg("n"), py::arg("coarse_points") = 61, py::arg("g_min") = 0.2,
        py::arg("g_max") = 2.0);
  m.def("extrapolate", [](const std::vector<std::pair<int, double>>& peaks) {
    std::vector<SizePeak> p;
    for (const auto& [n, g] : peaks) p.push_back({n, g});
    const auto fit = extrapolate(p);
    py::dict d;
    d["intercept"] = fit.intercept;
    d["slope"] = fit.slope;
    d["stderr"] = fit.stderr_intercept;
    d["confidence"] = fit.confidence;
    d["monotone"] = fit.monotone;
    d["residuals"] = fit.residuals;
    return d;
  });
}
