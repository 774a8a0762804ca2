#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "yfluor/dressed.hpp"
#include "yfluor/dynamics.hpp"
#include "yfluor/experiment.hpp"
#include "yfluor/spectrum.hpp"

namespace py = pybind11;
using namespace yfluor;

namespace {

py::array_t<std::complex<double>> to_array(const DensityMatrix& rho) {
  py::array_t<std::complex<double>> out({4, 4});
  auto view = out.mutable_unchecked<2>();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) view(m, n) = rho(m + 1, n + 1);
  return out;
}

DensityMatrix from_array(const py::array_t<std::complex<double>>& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != 4 || arr.shape(1) != 4) {
    throw py::value_error("density matrix must be 4x4");
  }
  auto view = arr.unchecked<2>();
  DensityMatrix rho;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) rho(m + 1, n + 1) = view(m, n);
  return rho;
}

Channel channel_from_string(const std::string& name) {
  if (name == "a") return Channel::a;
  if (name == "b") return Channel::b;
  throw py::value_error("channel must be 'a' or 'b'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Steady states, dressed states and resonance-fluorescence spectra of a "
      "coherently driven four-level Y atom with spontaneous-emission "
      "interference. All rates and frequencies are in units of gamma3.";

  py::register_exception<Error>(m, "YfluorError", PyExc_RuntimeError);

  py::class_<AtomParams>(m, "AtomParams")
      .def(py::init<>())
      .def_readwrite("gamma1", &AtomParams::gamma1)
      .def_readwrite("gamma2", &AtomParams::gamma2)
      .def_readwrite("gamma3", &AtomParams::gamma3)
      .def_readwrite("w12", &AtomParams::w12)
      .def_readwrite("delta_a", &AtomParams::delta_a)
      .def_readwrite("delta_b", &AtomParams::delta_b)
      .def_readwrite("omega1", &AtomParams::omega1)
      .def_readwrite("omega2", &AtomParams::omega2)
      .def_readwrite("omega3", &AtomParams::omega3)
      .def_readwrite("p", &AtomParams::p)
      .def("__repr__", [](const AtomParams& p) {
        return "AtomParams(gamma1=" + std::to_string(p.gamma1) +
               ", gamma2=" + std::to_string(p.gamma2) +
               ", w12=" + std::to_string(p.w12) + ", p=" + std::to_string(p.p) +
               ", ...)";
      });

  py::class_<DressedState>(m, "DressedState")
      .def_readonly("lam", &DressedState::lambda)
      .def_property_readonly("coefficients",
                             [](const DressedState& st) {
                               return std::vector<double>(st.c.begin(), st.c.end());
                             })
      .def_property_readonly("label", [](const DressedState& st) {
        return std::string(dressed_label_name(st.label));
      });

  m.def("validate", &validate, py::arg("params"));

  m.def(
      "steady_state",
      [](const AtomParams& params) { return to_array(steady_state(params)); },
      py::arg("params"), "Steady-state density matrix as a 4x4 complex array.");

  m.def(
      "propagate",
      [](const AtomParams& params, const py::array_t<std::complex<double>>& rho0,
         double t_final, double dt) {
        return to_array(propagate(params, from_array(rho0), t_final, dt));
      },
      py::arg("params"), py::arg("rho0"), py::arg("t_final"), py::arg("dt"));

  m.def(
      "sweep",
      [](const AtomParams& params, const std::string& axis,
         const std::vector<double>& grid) {
        const SweepSeries series = sweep(params, sweep_axis_from_name(axis), grid);
        py::dict out;
        const size_t n = grid.size();
        std::vector<double> ok(n), r11(n), r22(n), r33(n), r44(n), ss(n), aa(n);
        for (size_t i = 0; i < n; ++i) {
          const SweepRecord& rec = series.records[i];
          ok[i] = rec.ok ? 1.0 : 0.0;
          const double nan = std::nan("");
          r11[i] = rec.ok ? rec.rho11 : nan;
          r22[i] = rec.ok ? rec.rho22 : nan;
          r33[i] = rec.ok ? rec.rho33 : nan;
          r44[i] = rec.ok ? rec.rho44 : nan;
          ss[i] = rec.ok ? rec.rho_ss : nan;
          aa[i] = rec.ok ? rec.rho_aa : nan;
        }
        out["axis"] = grid;
        out["ok"] = ok;
        out["rho11"] = r11;
        out["rho22"] = r22;
        out["rho33"] = r33;
        out["rho44"] = r44;
        out["rho_ss"] = ss;
        out["rho_aa"] = aa;
        return out;
      },
      py::arg("params"), py::arg("axis"), py::arg("grid"),
      "Steady-state populations along a parameter grid; singular points "
      "come back as NaN.");

  m.def("analytic_rho11", &analytic_rho11, py::arg("delta_a"), py::arg("omega"),
        py::arg("p"));

  m.def(
      "hamiltonian_matrix",
      [](const AtomParams& params) {
        const auto h = hamiltonian_matrix(params);
        py::array_t<double> out({4, 4});
        auto view = out.mutable_unchecked<2>();
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c) view(r, c) = h[r * 4 + c];
        return out;
      },
      py::arg("params"));

  m.def(
      "dressed_states",
      [](const AtomParams& params) {
        const auto states = dressed_states(params);
        return std::vector<DressedState>(states.begin(), states.end());
      },
      py::arg("params"),
      "Four dressed states in ascending eigenvalue order, labelled when the "
      "closed-form regime applies.");

  m.def(
      "dressed_populations",
      [](const py::array_t<std::complex<double>>& rho,
         const std::vector<DressedState>& states) {
        if (states.size() != 4) throw py::value_error("expected 4 dressed states");
        std::array<DressedState, 4> arr{states[0], states[1], states[2], states[3]};
        const auto pops = dressed_populations(from_array(rho), arr);
        return std::vector<double>(pops.begin(), pops.end());
      },
      py::arg("rho"), py::arg("states"));

  m.def(
      "sym_antisym",
      [](const py::array_t<std::complex<double>>& rho, const AtomParams& params) {
        const SymAntisymRecord rec = sym_antisym(from_array(rho), params);
        return py::make_tuple(rec.rho_ss, rec.rho_aa, rec.rho_sa);
      },
      py::arg("rho"), py::arg("params"),
      "Returns (rho_ss, rho_aa, rho_sa) of the excited doublet.");

  m.def(
      "transition_rates",
      [](const std::vector<DressedState>& states, const AtomParams& params) {
        if (states.size() != 4) throw py::value_error("expected 4 dressed states");
        std::array<DressedState, 4> arr{states[0], states[1], states[2], states[3]};
        const TransitionRates rates = transition_rates(arr, params);
        py::array_t<double> a({4, 4}), b({4, 4});
        auto va = a.mutable_unchecked<2>();
        auto vb = b.mutable_unchecked<2>();
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < 4; ++j) {
            va(i, j) = rates.a[i][j];
            vb(i, j) = rates.b[i][j];
          }
        }
        return py::make_tuple(a, b);
      },
      py::arg("states"), py::arg("params"));

  m.def(
      "spectrum_a",
      [](const AtomParams& params, const std::vector<double>& offsets) {
        return spectrum_a(params, offsets).values;
      },
      py::arg("params"), py::arg("offsets"));

  m.def(
      "spectrum_b",
      [](const AtomParams& params, const std::vector<double>& offsets) {
        return spectrum_b(params, offsets).values;
      },
      py::arg("params"), py::arg("offsets"));

  m.def(
      "spectrum_oracle",
      [](const AtomParams& params, const std::string& channel,
         const std::vector<double>& offsets) {
        return spectrum_oracle(params, channel_from_string(channel), offsets).values;
      },
      py::arg("params"), py::arg("channel"), py::arg("offsets"),
      "Time-domain cross-check of the resolvent spectra (slow; intended for "
      "validation).");

  m.def(
      "run_figure",
      [](const std::string& figure_id, const std::string& out_prefix) {
        ExperimentConfig config = figure_preset(figure_id);
        config.out_prefix = out_prefix;
        std::ostringstream log, err;
        const int code = run_experiment(config, log, err);
        if (code != 0) throw Error(err.str());
        return log.str();
      },
      py::arg("figure_id"), py::arg("out_prefix"),
      "Writes the CSV data and gnuplot script of a named figure preset.");
}
