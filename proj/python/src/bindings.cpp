// Copyright 2026 The cluster-teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cteleport/harness.hpp"

namespace py = pybind11;
using namespace cteleport;

namespace {

std::vector<QubitLabel> to_labels(const std::vector<int>& ids) {
    std::vector<QubitLabel> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(QubitLabel{id});
    return out;
}

std::vector<int> label_ids(const StateVector& s) {
    std::vector<int> out;
    for (const auto& l : s.labels()) out.push_back(l.id);
    return out;
}

py::dict trial_dict(const TrialResult& t) {
    py::dict d;
    d["outcome13"] = t.outcome13;
    d["outcome26"] = t.outcome26;
    d["probability"] = t.probability;
    d["correction"] = t.correction.to_string();
    d["corrected_state"] = t.corrected_state;
    d["fidelity"] = t.fidelity;
    return d;
}

std::vector<std::string> op_names(const std::vector<CorrectionOp>& ops) {
    std::vector<std::string> out;
    for (const auto& op : ops) out.push_back(op.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dense state-vector simulation of two-qubit teleportation through a four-qubit cluster channel";

    py::register_exception<ImpossibleBranch>(m, "ImpossibleBranch", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<Pauli>(m, "Pauli")
        .value("I", Pauli::I)
        .value("X", Pauli::X)
        .value("Y", Pauli::Y)
        .value("Z", Pauli::Z);

    py::enum_<BellOutcome>(m, "BellOutcome")
        .value("PhiPlus", BellOutcome::PhiPlus)
        .value("PhiMinus", BellOutcome::PhiMinus)
        .value("PsiPlus", BellOutcome::PsiPlus)
        .value("PsiMinus", BellOutcome::PsiMinus)
        .def("__str__", [](BellOutcome o) { return std::string(to_string(o)); });

    py::enum_<Scheme>(m, "Scheme").value("One", Scheme::One).value("Two", Scheme::Two);

    py::class_<StateVector>(m, "StateVector")
        .def_static(
            "from_amplitudes",
            [](const std::vector<int>& labels, std::vector<Amplitude> amps) {
                return StateVector::from_amplitudes(to_labels(labels), std::move(amps));
            },
            py::arg("labels"), py::arg("amplitudes"))
        .def_property_readonly("labels", &label_ids)
        .def_property_readonly("amplitudes",
                               [](const StateVector& s) {
                                   return std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
                               })
        .def("with_global_phase", &StateVector::with_global_phase, py::arg("theta"))
        .def("__len__", &StateVector::dimension)
        .def("__repr__", [](const StateVector& s) { return "StateVector(" + s.to_string() + ")"; });

    m.def(
        "basis_state",
        [](const std::vector<int>& labels, const std::vector<int>& bits) { return basis_state(to_labels(labels), bits); },
        py::arg("labels"), py::arg("bits"));
    m.def("tensor", &tensor);
    m.def("inner", &inner);
    m.def("fidelity", &fidelity);
    m.def(
        "normalize",
        [](const std::vector<int>& labels, std::vector<Amplitude> amps) {
            return normalize(to_labels(labels), std::move(amps));
        },
        py::arg("labels"), py::arg("amplitudes"));

    m.def(
        "pauli_matrix",
        [](Pauli p) {
            const auto& u = pauli_matrix(p);
            return std::vector<std::vector<Amplitude>>{{u(0, 0), u(0, 1)}, {u(1, 0), u(1, 1)}};
        },
        py::arg("pauli"));
    m.def(
        "apply_pauli", [](const StateVector& s, int q, Pauli p) { return apply_pauli(s, QubitLabel{q}, p); },
        py::arg("state"), py::arg("qubit"), py::arg("pauli"));
    m.def(
        "apply_cz", [](const StateVector& s, int c, int t) { return apply_cz(s, QubitLabel{c}, QubitLabel{t}); },
        py::arg("state"), py::arg("control"), py::arg("target"));

    m.def(
        "bell_vector", [](BellOutcome o, int a, int b) { return bell_vector(o, QubitLabel{a}, QubitLabel{b}); },
        py::arg("outcome"), py::arg("a"), py::arg("b"));
    m.def(
        "project_bell",
        [](const StateVector& s, int a, int b, BellOutcome o) {
            auto r = project_bell(s, QubitLabel{a}, QubitLabel{b}, o);
            py::object rest = r.possible() ? py::cast(r.remainder()) : py::none();
            return py::make_tuple(r.probability(), rest);
        },
        py::arg("state"), py::arg("a"), py::arg("b"), py::arg("outcome"),
        "Returns (probability, remainder); remainder is None for an impossible outcome.");

    m.def("cluster_state", &cluster_state);
    m.def(
        "make_input",
        [](Scheme scheme, const std::vector<Amplitude>& coeffs) {
            return make_input(InputState::from_coefficients(scheme, coeffs));
        },
        py::arg("scheme"), py::arg("coeffs"));
    m.def(
        "assemble_total",
        [](Scheme scheme, const std::vector<Amplitude>& coeffs) {
            return assemble_total(InputState::from_coefficients(scheme, coeffs));
        },
        py::arg("scheme"), py::arg("coeffs"));
    m.def(
        "run_branch",
        [](Scheme scheme, const std::vector<Amplitude>& coeffs, BellOutcome o13, BellOutcome o26) {
            return trial_dict(run_branch(InputState::from_coefficients(scheme, coeffs), o13, o26));
        },
        py::arg("scheme"), py::arg("coeffs"), py::arg("outcome13"), py::arg("outcome26"));
    m.def(
        "table_lookup", [](Scheme scheme, BellOutcome o13, BellOutcome o26) {
            return op_names(table_lookup(scheme, o13, o26));
        },
        py::arg("scheme"), py::arg("outcome13"), py::arg("outcome26"));
    m.def(
        "derive_corrections",
        [](Scheme scheme, BellOutcome o13, BellOutcome o26, std::uint64_t seed) {
            return op_names(derive_corrections(scheme, o13, o26, default_probes(scheme, seed)));
        },
        py::arg("scheme"), py::arg("outcome13"), py::arg("outcome26"), py::arg("seed") = 0);

    m.def(
        "run_report",
        [](const std::string& mode, int scheme, std::optional<std::string> coeffs, bool renormalize,
           std::size_t random_inputs, std::size_t trials, std::uint64_t seed, double tol, const std::string& format) {
            RunConfig cfg;
            cfg.mode = mode_from_string(mode);
            if (scheme != 1 && scheme != 2) throw ConfigError("scheme must be 1 or 2");
            cfg.scheme = scheme == 1 ? Scheme::One : Scheme::Two;
            if (coeffs) cfg.input_coeffs = parse_coefficient_list(*coeffs);
            cfg.renormalize = renormalize;
            cfg.random_inputs = random_inputs;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.fidelity_tol = tol;
            cfg.output_format = format_from_string(format);
            Report r = run(cfg);
            return py::make_tuple(emit_report(r, cfg.output_format), r.exit_code());
        },
        py::arg("mode"), py::arg("scheme") = 2, py::arg("coeffs") = py::none(), py::arg("renormalize") = false,
        py::arg("random_inputs") = 100, py::arg("trials") = 16000, py::arg("seed") = 0,
        py::arg("tol") = kFidelityTolerance, py::arg("format") = "json",
        "Runs a harness mode and returns (report text, exit code).");
}
