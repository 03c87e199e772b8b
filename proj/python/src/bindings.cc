// Copyright 2026 The locreal Authors
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
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "locreal/errors.h"
#include "locreal/inequalities.h"
#include "locreal/mc_sim.h"
#include "locreal/runner.h"
#include "locreal/scenario.h"
#include "locreal/violation_search.h"

namespace py = pybind11;
using namespace locreal;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray& a) {
    if (a.ndim() != 2) {
        throw DimensionError("expected a 2-d array");
    }
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    return ComplexMatrix(rows, cols, std::vector<Complex>(a.data(), a.data() + rows * cols));
}

ComplexArray to_array(const ComplexMatrix& m) {
    ComplexArray out({m.rows(), m.cols()});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

ChshCoefficients coefficients(const Matrix2& gamma, const std::string& constraint) {
    if (constraint == "auto") {
        return ChshCoefficients::classify(gamma);
    }
    if (constraint == "row") {
        return ChshCoefficients(gamma, ConstraintClass::row);
    }
    if (constraint == "column") {
        return ChshCoefficients(gamma, ConstraintClass::column);
    }
    if (constraint == "none") {
        return ChshCoefficients(gamma, ConstraintClass::none);
    }
    throw ValidationError("constraint must be auto, row, column or none");
}

const Matrix2 kStandard{{{1, 1}, {1, -1}}};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bell and CHSH inequality toolkit";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);

    py::class_<InequalityReport>(m, "Report")
        .def_readonly("name", &InequalityReport::name)
        .def_readonly("lhs", &InequalityReport::lhs)
        .def_readonly("rhs", &InequalityReport::rhs)
        .def_readonly("margin", &InequalityReport::margin)
        .def_readonly("satisfied", &InequalityReport::satisfied)
        .def_readonly("bound_asserted", &InequalityReport::bound_asserted)
        .def_readonly("sign", &InequalityReport::sign)
        .def_readonly("detail", &InequalityReport::detail)
        .def_readonly("tol", &InequalityReport::tol)
        .def_property_readonly("conditions",
                               [](const InequalityReport& r) {
                                   py::dict d;
                                   for (const auto& [k, v] : r.conditions_checked) {
                                       d[py::str(k)] = v;
                                   }
                                   return d;
                               })
        .def("to_json", [](const InequalityReport& r) { return report_to_json(r).dump(); })
        .def("__repr__", [](const InequalityReport& r) {
            return "<Report " + r.name + " lhs=" + std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs) +
                   (r.satisfied ? " satisfied>" : " violated>");
        });

    py::class_<DensityOperator>(m, "DensityOperator")
        .def(py::init([](const ComplexArray& a) { return DensityOperator(to_matrix(a)); }), py::arg("matrix"))
        .def_static("maximally_mixed", &DensityOperator::maximally_mixed, py::arg("dim"))
        .def_property_readonly("dim", &DensityOperator::dim)
        .def_property_readonly("matrix", [](const DensityOperator& d) { return to_array(d.matrix()); });

    m.def("singlet_state", &singlet_state);
    m.def("werner_state", &werner_state, py::arg("p"));

    py::class_<PovMeasure>(m, "PovMeasure")
        .def(py::init([](std::vector<double> outcomes, const std::vector<ComplexArray>& elements) {
                 std::vector<ComplexMatrix> ms;
                 for (const auto& e : elements) {
                     ms.push_back(to_matrix(e));
                 }
                 return PovMeasure(OutcomeSet(std::move(outcomes)), std::move(ms));
             }),
             py::arg("outcomes"), py::arg("elements"))
        .def_property_readonly("dim", &PovMeasure::dim)
        .def_property_readonly("outcomes", [](const PovMeasure& p) { return p.outcomes().values(); })
        .def_property_readonly("correlation_operator",
                               [](const PovMeasure& p) { return to_array(correlation_operator(p)); });

    m.def(
        "qubit_pov",
        [](std::array<double, 3> bloch, double visibility) {
            return qubit_projective_pov(QubitSetting(bloch, visibility));
        },
        py::arg("bloch"), py::arg("visibility") = 1.0);
    m.def(
        "qubit_pov_xz",
        [](double degrees, double visibility) {
            return qubit_projective_pov(QubitSetting::in_xz_plane(degrees, visibility));
        },
        py::arg("degrees"), py::arg("visibility") = 1.0);

    m.def("trace_norm", [](const ComplexArray& a) { return trace_norm(to_matrix(a)); });
    m.def("operator_norm", [](const ComplexArray& a) { return operator_norm(to_matrix(a)); });

    m.def(
        "correlation",
        [](const DensityOperator& rho, const PovMeasure& m1, const PovMeasure& m2, bool symmetrized) {
            return correlation(rho, m1, m2, symmetrized);
        },
        py::arg("rho"), py::arg("m1"), py::arg("m2"), py::arg("symmetrized") = false);

    m.def(
        "check_chsh",
        [](const DensityOperator& rho, const PovMeasure& a1, const PovMeasure& a2, const PovMeasure& b1,
           const PovMeasure& b2, const Matrix2& gamma, const std::string& constraint, double tol) {
            return check_extended_chsh(rho, {a1, a2, b1, b2}, coefficients(gamma, constraint), std::nullopt, tol);
        },
        py::arg("rho"), py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("b2"), py::arg("gamma") = kStandard,
        py::arg("constraint") = "auto", py::arg("tol") = kDefaultTolerance);

    m.def(
        "check_bell",
        [](const DensityOperator& rho, const PovMeasure& a, const PovMeasure& alice_b1, const PovMeasure& bob_b1,
           const PovMeasure& bob_b2, int sign, double tol) {
            if (sign != 1 && sign != -1) {
                throw ValidationError("sign must be +1 or -1");
            }
            return check_bell(rho, {a, alice_b1, bob_b1, bob_b2}, sign == 1 ? Sign::plus : Sign::minus, tol);
        },
        py::arg("rho"), py::arg("a"), py::arg("alice_b1"), py::arg("bob_b1"), py::arg("bob_b2"), py::arg("sign") = 1,
        py::arg("tol") = kDefaultTolerance);

    m.def(
        "classical_lhv_bound",
        [](const Matrix2& gamma, const std::string& constraint) {
            return classical_lhv_bound(coefficients(gamma, constraint)).value;
        },
        py::arg("gamma") = kStandard, py::arg("constraint") = "auto");

    m.def(
        "quantum_max_value",
        [](const PovMeasure& a1, const PovMeasure& a2, const PovMeasure& b1, const PovMeasure& b2,
           const Matrix2& gamma, const std::string& constraint) {
            return quantum_max_value(coefficients(gamma, constraint), {a1, a2, b1, b2}).value;
        },
        py::arg("a1"), py::arg("a2"), py::arg("b1"), py::arg("b2"), py::arg("gamma") = kStandard,
        py::arg("constraint") = "auto");

    m.def(
        "search_settings",
        [](const DensityOperator& rho, const Matrix2& gamma, const std::string& constraint, std::uint64_t seed,
           unsigned jobs) {
            SearchBudget budget;
            budget.jobs = jobs;
            const auto r = search_settings(rho, coefficients(gamma, constraint), budget, seed);
            py::list settings;
            for (const auto& s : r.settings) {
                settings.append(py::make_tuple(s.bloch[0], s.bloch[1], s.bloch[2]));
            }
            py::dict d;
            d["value"] = r.value;
            d["history"] = r.history;
            d["settings"] = settings;
            return d;
        },
        py::arg("rho"), py::arg("gamma") = kStandard, py::arg("constraint") = "auto", py::arg("seed") = 0,
        py::arg("jobs") = 1);

    m.def(
        "sample_correlation",
        [](const DensityOperator& rho, const PovMeasure& m1, const PovMeasure& m2, std::uint64_t n,
           std::uint64_t seed, bool symmetrized) {
            py::gil_scoped_release release;
            const auto b = sample_quantum_joint(rho, make_alice_bob_pov(m1, m2, symmetrized), n, seed);
            return std::make_pair(b.mean12(), b.se12());
        },
        py::arg("rho"), py::arg("m1"), py::arg("m2"), py::arg("n"), py::arg("seed") = 0,
        py::arg("symmetrized") = false);

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("name", &Scenario::name)
        .def_readonly("description", &Scenario::description)
        .def_property_readonly("kind",
                               [](const Scenario& s) { return s.kind == ScenarioKind::info ? "info" : "quantum"; })
        .def("to_json", [](const Scenario& s) { return to_json(s).dump(); });

    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("parse_scenario", [](const std::string& text) { return parse_scenario_text(text); }, py::arg("text"));
    m.def("scenario_distance", &scenario_distance);

    m.def(
        "run_json",
        [](const std::string& command, const Scenario& s, std::optional<double> tol,
           std::optional<std::uint64_t> seed, unsigned jobs) {
            RunOptions options{tol, seed, jobs};
            RunResult r;
            {
                py::gil_scoped_release release;
                r = run(parse_command(command), s, options);
            }
            return r.document.dump();
        },
        py::arg("command"), py::arg("scenario"), py::arg("tol") = std::nullopt, py::arg("seed") = std::nullopt,
        py::arg("jobs") = 1);
}
