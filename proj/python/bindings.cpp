// Copyright 2026 The icoheat Authors
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


#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "icoheat/channels.hpp"
#include "icoheat/commands.hpp"
#include "icoheat/quantum_switch.hpp"
#include "icoheat/stochastic.hpp"
#include "icoheat/thermo_cycle.hpp"

namespace py = pybind11;
using namespace icoheat;

namespace {

py::dict branches_dict(const SwitchOutput& out) {
  py::dict d;
  for (const auto& [o, b] : out.branches) {
    py::dict entry;
    entry["probability"] = b.probability;
    if (b.state) {
      entry["state"] = b.state->matrix();
    } else {
      entry["state"] = py::none();
    }
    d[py::str(std::string(to_string(o)))] = entry;
  }
  return d;
}

ControlOutcome parse_outcome(const std::string& name) {
  for (const auto o : kAllOutcomes) {
    if (to_string(o) == name) return o;
  }
  throw py::value_error("unknown control outcome: " + name);
}

ControlBasis parse_basis(const std::string& name) {
  if (name == "plus-minus") return ControlBasis::PlusMinus;
  if (name == "computational") return ControlBasis::Computational;
  throw py::value_error("unknown basis: " + name);
}

Strategy parse_strategy(const std::string& name) {
  if (name == "classical") return Strategy::Classical;
  if (name == "multi-pass") return Strategy::MultiPass;
  throw py::value_error("unknown strategy: " + name);
}

py::dict report_dict(const CycleReport& r) {
  py::dict d;
  d["e_c"] = r.spec_cold.e_c();
  d["strategy"] = std::string(to_string(r.strategy));
  d["beta_reset"] = r.beta_reset;
  d["p_minus"] = r.p_minus;
  d["e_minus"] = r.e_minus;
  d["dE1"] = r.dE1;
  d["dE2"] = r.dE2;
  d["dE"] = r.dE;
  d["entropy_S"] = r.entropy_S;
  d["dW"] = r.dW;
  d["n_bar"] = r.n_bar;
  d["eta"] = r.eta;
  return d;
}

}  // namespace

PYBIND11_MODULE(_icoheat, m) {
  m.doc() = "Quantum-switch heat extraction and refrigeration simulator";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<VanishingBranch>(m, "VanishingBranch", PyExc_ArithmeticError);

  py::class_<Hamiltonian>(m, "Hamiltonian")
      .def(py::init<double>(), py::arg("omega") = 1.0)
      .def_property_readonly("omega", &Hamiltonian::omega)
      .def("matrix", &Hamiltonian::matrix);

  py::class_<ThermalSpec>(m, "ThermalSpec")
      .def_static("from_beta", &ThermalSpec::from_beta, py::arg("beta"), py::arg("h") = Hamiltonian{})
      .def_static("from_excited_population", &ThermalSpec::from_excited_population, py::arg("e_c"),
                  py::arg("h") = Hamiltonian{})
      .def_property_readonly("beta", &ThermalSpec::beta)
      .def_property_readonly("e_c", &ThermalSpec::e_c)
      .def_property_readonly("ground_population", &ThermalSpec::ground_population)
      .def_property_readonly("partition_function", &ThermalSpec::partition_function)
      .def_property_readonly("hamiltonian", &ThermalSpec::hamiltonian)
      .def("__repr__", [](const ThermalSpec& s) {
        std::ostringstream os;
        os.precision(17);
        os << "ThermalSpec(e_c=" << s.e_c() << ", beta=" << s.beta() << ")";
        return os.str();
      });

  m.def("thermal_state", [](const ThermalSpec& s) { return thermal_state(s).matrix(); }, py::arg("spec"));
  m.def(
      "energy", [](const Mat2& rho, const Hamiltonian& h) { return energy(Qubit(rho), h); },
      py::arg("rho"), py::arg("h") = Hamiltonian{});

  py::class_<KrausChannel>(m, "KrausChannel")
      .def_property_readonly("label", &KrausChannel::label)
      .def("__len__", &KrausChannel::size)
      .def("completeness_error", [](const KrausChannel& ch) { return ch.completeness_error(); })
      .def("scaled_operators", &KrausChannel::scaled_operators)
      .def("choi", &KrausChannel::choi)
      .def("apply", [](const KrausChannel& ch, const Mat2& rho) { return apply(ch, Qubit(rho)).matrix(); },
           py::arg("rho"));

  m.def("identity_channel", &identity_channel);
  m.def("full_ad_ground", &full_ad_ground);
  m.def("full_ad_excited", &full_ad_excited);
  m.def("thermalizing_channel", &thermalizing_channel, py::arg("spec"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("channel_fidelity", &channel_fidelity, py::arg("a"), py::arg("b"));

  m.def(
      "run_switch",
      [](const ThermalSpec& spec, const Mat2& rho, double visibility) {
        const auto out = run_switch(spec, Qubit(rho), visibility);
        py::dict d;
        d["joint"] = out.joint.matrix();
        d["visibility"] = out.visibility;
        d["branches"] = branches_dict(out);
        return d;
      },
      py::arg("spec"), py::arg("rho"), py::arg("visibility") = 1.0);

  m.def(
      "branch_energy_change",
      [](const ThermalSpec& spec, const Mat2& rho, const std::string& outcome, double visibility) {
        const Qubit q(rho);
        const auto c = branch_energy_change(run_switch(spec, q, visibility), q, spec.hamiltonian(),
                                            parse_outcome(outcome));
        return py::make_tuple(c.dE, c.dE_weighted);
      },
      py::arg("spec"), py::arg("rho"), py::arg("outcome"), py::arg("visibility") = 1.0,
      "Returns (dE, dE_weighted) for one control outcome.");

  m.def(
      "multipass",
      [](const ThermalSpec& spec, int n_steps, double visibility) {
        py::list rows;
        for (const auto& s : multipass(spec, n_steps, visibility).steps) {
          py::dict d;
          d["n"] = s.n;
          d["prob_minus"] = s.prob_minus;
          d["e_minus"] = s.e_minus ? py::cast(*s.e_minus) : py::none();
          d["prob_plus"] = s.prob_plus;
          d["e_plus"] = s.e_plus;
          rows.append(d);
        }
        return rows;
      },
      py::arg("spec"), py::arg("n_steps"), py::arg("visibility") = 1.0);

  m.def(
      "steady_state",
      [](const ThermalSpec& spec, double visibility) {
        const auto s = steady_state(spec, visibility);
        py::dict d;
        d["x_star"] = s.x_star;
        d["e_minus_star"] = s.e_minus_star;
        d["prob_minus_star"] = s.prob_minus_star;
        return d;
      },
      py::arg("spec"), py::arg("visibility") = 1.0);

  m.def(
      "cycle_report",
      [](const ThermalSpec& cold, const std::string& strategy, std::optional<double> beta_reset) {
        const double beta = beta_reset ? *beta_reset : cold.beta();
        return report_dict(cycle_report(cold, beta, parse_strategy(strategy)));
      },
      py::arg("cold"), py::arg("strategy") = "multi-pass", py::arg("beta_reset") = py::none(),
      "beta_reset defaults to the cold-reservoir inverse temperature.");

  m.def(
      "cop_sweep",
      [](const std::vector<double>& grid, const std::string& strategy, std::optional<double> beta_reset) {
        const auto rule = beta_reset ? BetaResetRule::explicit_value(*beta_reset) : BetaResetRule::equal_cold();
        py::list out;
        for (const auto& r : cop_sweep(grid, rule, parse_strategy(strategy))) out.append(report_dict(r));
        return out;
      },
      py::arg("grid"), py::arg("strategy") = "multi-pass", py::arg("beta_reset") = py::none());

  m.def(
      "sample_switch",
      [](const ThermalSpec& spec, std::uint64_t shots, std::uint64_t seed, double visibility,
         const std::string& basis) {
        const auto s = sample_switch(spec, thermal_state(spec), visibility, shots, seed, parse_basis(basis));
        py::dict d;
        for (std::size_t i = 0; i < 2; ++i) {
          py::dict entry;
          entry["count"] = s.counts[i][0] + s.counts[i][1];
          entry["excited_count"] = s.counts[i][1];
          const auto& est = s.estimates.at(s.outcomes[i]);
          entry["e_hat"] = est ? py::cast(est->e_hat) : py::none();
          entry["std_err"] = est ? py::cast(est->std_err) : py::none();
          d[py::str(std::string(to_string(s.outcomes[i])))] = entry;
        }
        return d;
      },
      py::arg("spec"), py::arg("shots"), py::arg("seed") = 0, py::arg("visibility") = 1.0,
      py::arg("basis") = "plus-minus", "Samples the switch fed with the reservoir thermal state.");

  m.def(
      "run_verification",
      [](double visibility) {
        py::list out;
        for (const auto& c : run_verification(visibility)) {
          py::dict d;
          d["name"] = c.name;
          d["residual"] = c.residual;
          d["tolerance"] = c.tolerance;
          d["passed"] = c.passed;
          out.append(d);
        }
        return out;
      },
      py::arg("visibility") = 1.0);

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli_main(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line interface in-process; returns (exit_code, stdout, stderr).");
}
