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

#include "locreal/scenario.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace locreal {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ScenarioError((path.empty() ? "/" : path) + ": " + message);
}

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

// Runs a library constructor, tagging its validation errors with `path`.
template <typename F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ScenarioError&) {
        throw;
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

const json& require(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        fail(at(path, key), "required field is missing");
    }
    return *it;
}

bool has(const json& j, const char* key) { return j.is_object() && j.contains(key); }

const json& array_at(const json& j, const std::string& path) {
    if (!j.is_array()) {
        fail(path, "expected an array");
    }
    return j;
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) {
        fail(path, "expected a number");
    }
    return j.get<double>();
}

std::uint64_t unsigned_number(const json& j, const std::string& path) {
    if (j.is_number_unsigned()) {
        return j.get<std::uint64_t>();
    }
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        fail(path, "expected a non-negative integer");
    }
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
}

int small_int(const json& j, const std::string& path) {
    const std::uint64_t v = unsigned_number(j, path);
    if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
        fail(path, "value too large");
    }
    return static_cast<int>(v);
}

std::string text(const json& j, const std::string& path) {
    if (!j.is_string()) {
        fail(path, "expected a string");
    }
    return j.get<std::string>();
}

bool boolean(const json& j, const std::string& path) {
    if (!j.is_boolean()) {
        fail(path, "expected true or false");
    }
    return j.get<bool>();
}

std::vector<double> numbers(const json& j, const std::string& path) {
    std::vector<double> out;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
        out.push_back(number(j[i], at(path, i)));
    }
    return out;
}

std::vector<std::vector<double>> number_rows(const json& j, const std::string& path) {
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
        out.push_back(numbers(j[i], at(path, i)));
    }
    return out;
}

std::vector<std::string> strings(const json& j, const std::string& path) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
        out.push_back(text(j[i], at(path, i)));
    }
    return out;
}

Complex complex_number(const json& j, const std::string& path) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2) {
        return {number(j[0], at(path, 0)), number(j[1], at(path, 1))};
    }
    fail(path, "expected a number or a [re, im] pair");
}

ComplexMatrix complex_matrix(const json& j, const std::string& path) {
    const std::size_t rows = array_at(j, path).size();
    if (rows == 0) {
        fail(path, "matrix has no rows");
    }
    const std::size_t cols = array_at(j[0], at(path, 0)).size();
    std::vector<Complex> data;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string rp = at(path, r);
        if (array_at(j[r], rp).size() != cols) {
            fail(rp, "row length differs from row 0");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            data.push_back(complex_number(j[r][c], at(rp, c)));
        }
    }
    return guarded(path, [&] { return ComplexMatrix(rows, cols, std::move(data)); });
}

std::vector<Complex> complex_vector(const json& j, const std::string& path) {
    std::vector<Complex> out;
    for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
        out.push_back(complex_number(j[i], at(path, i)));
    }
    return out;
}

std::array<double, 3> vector3(const json& j, const std::string& path) {
    const auto v = numbers(j, path);
    if (v.size() != 3) {
        fail(path, "expected three components");
    }
    return {v[0], v[1], v[2]};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

OutcomeSet outcome_set(const json& parent, const std::string& path, const char* key) {
    if (!has(parent, key)) {
        return OutcomeSet::plus_minus_one();
    }
    const std::string p = at(path, key);
    const json& j = parent.at(key);
    if (j.is_object()) {
        const auto values = numbers(require(j, p, "values"), at(p, "values"));
        const double bound = has(j, "bound") ? number(j.at("bound"), at(p, "bound")) : 1.0;
        return guarded(p, [&] { return OutcomeSet(values, bound); });
    }
    const auto values = numbers(j, p);
    return guarded(p, [&] { return OutcomeSet(values); });
}

json outcomes_to_json(const OutcomeSet& o) {
    if (o.bound() == 1.0) {
        return o.values();
    }
    return json{{"values", o.values()}, {"bound", o.bound()}};
}

StochasticKernel kernel_rows(const json& j, const std::string& path) {
    const auto rows = number_rows(j, path);
    return guarded(path, [&] { return StochasticKernel::from_rows(rows); });
}

GeneralizedObservable generalized(const OutcomeSet& outcomes, const json& j, const std::string& path) {
    auto kernel = kernel_rows(j, path);
    return guarded(path, [&] { return GeneralizedObservable(outcomes, std::move(kernel)); });
}

// ---------------------------------------------------------------------------
// Information model

InformationState information_state(const json& j, const std::string& path) {
    if (has(j, "uniform")) {
        const auto n = unsigned_number(j.at("uniform"), at(path, "uniform"));
        return guarded(path, [&] { return InformationState::uniform(n); });
    }
    const auto pi = numbers(require(j, path, "pi"), at(path, "pi"));
    std::vector<std::string> labels;
    if (has(j, "labels")) {
        labels = strings(j.at("labels"), at(path, "labels"));
    }
    return guarded(path, [&] { return InformationState(labels, pi); });
}

std::vector<double> value_function(const json& j, const std::string& path, const InformationState& theta) {
    if (j.is_object()) {
        std::vector<double> out;
        for (const auto& label : theta.labels()) {
            if (!j.contains(label)) {
                fail(path, "no value for point \"" + label + "\"");
            }
            out.push_back(number(j.at(label), at(path, label)));
        }
        if (j.size() != theta.size()) {
            fail(path, "values given for points outside Theta");
        }
        return out;
    }
    return numbers(j, path);
}

JointObservable joint_observable(const json& j, const std::string& path, const InformationState& theta) {
    const std::string type = text(require(j, path, "type"), at(path, "type"));
    const OutcomeSet o1 = outcome_set(j, path, "outcomes1");
    const OutcomeSet o2 = outcome_set(j, path, "outcomes2");
    if (type == "image") {
        const auto f1 = value_function(require(j, path, "f1"), at(path, "f1"), theta);
        const auto f2 = value_function(require(j, path, "f2"), at(path, "f2"), theta);
        return guarded(path, [&] { return make_image_observable(f1, f2, o1, o2); });
    }
    if (type == "product") {
        const auto p1 = generalized(o1, require(j, path, "p1"), at(path, "p1"));
        const auto p2 = generalized(o2, require(j, path, "p2"), at(path, "p2"));
        return guarded(path, [&] { return make_product_observable(p1, p2); });
    }
    if (type == "factorizable") {
        const auto nu = numbers(require(j, path, "nu"), at(path, "nu"));
        const std::string cp = at(path, "components");
        const json& cj = array_at(require(j, path, "components"), cp);
        std::vector<ObservablePair> components;
        for (std::size_t w = 0; w < cj.size(); ++w) {
            const std::string wp = at(cp, w);
            components.emplace_back(generalized(o1, require(cj[w], wp, "p1"), at(wp, "p1")),
                                    generalized(o2, require(cj[w], wp, "p2"), at(wp, "p2")));
        }
        std::optional<std::vector<std::size_t>> support;
        if (has(j, "support")) {
            const std::string sp = at(path, "support");
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < array_at(j.at("support"), sp).size(); ++i) {
                s.push_back(unsigned_number(j.at("support")[i], at(sp, i)));
            }
            support = std::move(s);
        }
        std::optional<StochasticKernel> off;
        if (has(j, "off_support_rows")) {
            off = kernel_rows(j.at("off_support_rows"), at(path, "off_support_rows"));
        }
        return guarded(path, [&] { return make_factorizable_observable(components, nu, support, off); });
    }
    if (type == "opaque") {
        auto kernel = kernel_rows(require(j, path, "kernel"), at(path, "kernel"));
        return guarded(path, [&] { return JointObservable(o1, o2, std::move(kernel)); });
    }
    fail(at(path, "type"), "unknown observable type \"" + type + "\" (image, product, factorizable, opaque)");
}

json rows_to_json(const StochasticKernel& k) { return k.to_rows(); }

json joint_to_json(const InfoObservableEntry& e) {
    const JointObservable& jo = e.joint;
    json j{{"a", e.alice}, {"b", e.bob}, {"type", provenance_name(jo.provenance())}};
    j["outcomes1"] = outcomes_to_json(jo.outcomes1());
    j["outcomes2"] = outcomes_to_json(jo.outcomes2());
    const auto& fac = jo.factorization();
    switch (jo.provenance()) {
        case Provenance::image:
            j["f1"] = fac->components.front().first.mean_function();
            j["f2"] = fac->components.front().second.mean_function();
            break;
        case Provenance::product:
            j["p1"] = rows_to_json(fac->components.front().first.kernel());
            j["p2"] = rows_to_json(fac->components.front().second.kernel());
            break;
        case Provenance::factorizable: {
            j["nu"] = fac->nu;
            json comps = json::array();
            for (const auto& [p1, p2] : fac->components) {
                comps.push_back({{"p1", rows_to_json(p1.kernel())}, {"p2", rows_to_json(p2.kernel())}});
            }
            j["components"] = std::move(comps);
            if (fac->support.size() != jo.theta_size()) {
                j["support"] = fac->support;
                j["off_support_rows"] = rows_to_json(jo.kernel());
            }
            break;
        }
        case Provenance::opaque:
            j["kernel"] = rows_to_json(jo.kernel());
            break;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Quantum model

DensityOperator density(const json& j, const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected a state object");
    }
    if (has(j, "matrix")) {
        auto m = complex_matrix(j.at("matrix"), at(path, "matrix"));
        return guarded(path, [&] { return DensityOperator(std::move(m)); });
    }
    if (has(j, "pure")) {
        const auto psi = complex_vector(j.at("pure"), at(path, "pure"));
        return guarded(path, [&] { return DensityOperator::pure(psi); });
    }
    if (has(j, "bloch")) {
        const auto r = vector3(j.at("bloch"), at(path, "bloch"));
        ComplexMatrix m = ComplexMatrix::identity(2) + pauli_x() * Complex(r[0]) + pauli_y() * Complex(r[1]) +
                          pauli_z() * Complex(r[2]);
        m *= Complex(0.5);
        return guarded(path, [&] { return DensityOperator(std::move(m)); });
    }
    if (has(j, "werner")) {
        const double p = number(j.at("werner"), at(path, "werner"));
        return guarded(path, [&] { return werner_state(p); });
    }
    if (has(j, "singlet")) {
        return singlet_state();
    }
    if (has(j, "maximally_mixed")) {
        const auto d = unsigned_number(j.at("maximally_mixed"), at(path, "maximally_mixed"));
        return guarded(path, [&] { return DensityOperator::maximally_mixed(d); });
    }
    fail(path, "state needs one of matrix, pure, bloch, werner, singlet, maximally_mixed");
}

SeparableDecomposition decomposition(const json& j, const std::string& path) {
    SeparableDecomposition dec;
    dec.weights = numbers(require(j, path, "weights"), at(path, "weights"));
    if (has(j, "symmetrized")) {
        dec.symmetrized = boolean(j.at("symmetrized"), at(path, "symmetrized"));
    }
    const std::string pp = at(path, "pairs");
    const json& pj = array_at(require(j, path, "pairs"), pp);
    for (std::size_t i = 0; i < pj.size(); ++i) {
        const std::string ip = at(pp, i);
        DensityOperator tau = density(require(pj[i], ip, "tau"), at(ip, "tau"));
        DensityOperator tau_tilde = has(pj[i], "tau_tilde") ? density(pj[i].at("tau_tilde"), at(ip, "tau_tilde")) : tau;
        dec.pairs.emplace_back(std::move(tau), std::move(tau_tilde));
    }
    if (dec.pairs.empty()) {
        fail(pp, "decomposition has no terms");
    }
    guarded(path, [&] {
        dec.validate();
        return 0;
    });
    return dec;
}

json decomposition_to_json(const SeparableDecomposition& dec) {
    json pairs = json::array();
    for (const auto& [tau, tau_tilde] : dec.pairs) {
        pairs.push_back({{"tau", {{"matrix", matrix_to_json(tau.matrix())}}},
                         {"tau_tilde", {{"matrix", matrix_to_json(tau_tilde.matrix())}}}});
    }
    return {{"weights", dec.weights}, {"symmetrized", dec.symmetrized}, {"pairs", std::move(pairs)}};
}

QubitSetting qubit_setting(const json& j, const std::string& path) {
    const double v = has(j, "visibility") ? number(j.at("visibility"), at(path, "visibility")) : 1.0;
    if (has(j, "bloch")) {
        const auto n = vector3(j.at("bloch"), at(path, "bloch"));
        return guarded(path, [&] { return QubitSetting(n, v); });
    }
    if (has(j, "xz_deg")) {
        const double deg = number(j.at("xz_deg"), at(path, "xz_deg"));
        return guarded(path, [&] { return QubitSetting::in_xz_plane(deg, v); });
    }
    if (has(j, "theta_deg")) {
        const double theta = number(j.at("theta_deg"), at(path, "theta_deg")) * std::numbers::pi / 180.0;
        const double phi =
            has(j, "phi_deg") ? number(j.at("phi_deg"), at(path, "phi_deg")) * std::numbers::pi / 180.0 : 0.0;
        return guarded(path, [&] { return QubitSetting::from_angles(theta, phi, v); });
    }
    fail(path, "qubit setting needs bloch, xz_deg or theta_deg");
}

PovMeasure pov(const json& j, const std::string& path) {
    if (has(j, "qubit")) {
        const auto setting = qubit_setting(j.at("qubit"), at(path, "qubit"));
        return qubit_projective_pov(setting);
    }
    const OutcomeSet outcomes = outcome_set(j, path, "outcomes");
    const std::string ep = at(path, "elements");
    const json& ej = array_at(require(j, path, "elements"), ep);
    std::vector<ComplexMatrix> elements;
    for (std::size_t i = 0; i < ej.size(); ++i) {
        elements.push_back(complex_matrix(ej[i], at(ep, i)));
    }
    return guarded(path, [&] { return PovMeasure(outcomes, std::move(elements)); });
}

json pov_to_json(const PovMeasure& m) {
    json elements = json::array();
    for (const auto& e : m.elements()) {
        elements.push_back(matrix_to_json(e));
    }
    return {{"outcomes", outcomes_to_json(m.outcomes())}, {"elements", std::move(elements)}};
}

std::map<std::string, PovMeasure> pov_map(const json& j, const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected an object keyed by setting label");
    }
    std::map<std::string, PovMeasure> out;
    for (const auto& [label, value] : j.items()) {
        out.emplace(label, pov(value, at(path, label)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Checks

ConstraintClass parse_constraint(const std::string& name, const std::string& path) {
    if (name == "row") {
        return ConstraintClass::row;
    }
    if (name == "column") {
        return ConstraintClass::column;
    }
    if (name == "none") {
        return ConstraintClass::none;
    }
    fail(path, "constraint must be row, column, none or auto");
}

ChshCoefficients coefficients(const json& j, const std::string& path) {
    if (!has(j, "gamma")) {
        return ChshCoefficients::standard();
    }
    const std::string gp = at(path, "gamma");
    const auto rows = number_rows(j.at("gamma"), gp);
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) {
        fail(gp, "gamma must be a 2x2 matrix");
    }
    const Matrix2 g{{{rows[0][0], rows[0][1]}, {rows[1][0], rows[1][1]}}};
    const std::string name = has(j, "constraint") ? text(j.at("constraint"), at(path, "constraint")) : "auto";
    if (name == "auto") {
        return guarded(gp, [&] { return ChshCoefficients::classify(g); });
    }
    const ConstraintClass c = parse_constraint(name, at(path, "constraint"));
    return guarded(gp, [&] { return ChshCoefficients(g, c); });
}

void coefficients_to_json(json& j, const ChshCoefficients& c) {
    const auto& g = c.gamma();
    j["gamma"] = {{g[0][0], g[0][1]}, {g[1][0], g[1][1]}};
    j["constraint"] = constraint_class_name(c.constraint_class());
}

SettingPair setting_pair(const json& j, const std::string& path) {
    const auto v = strings(j, path);
    if (v.size() != 2) {
        fail(path, "expected [alice_label, bob_label]");
    }
    return {v[0], v[1]};
}

std::array<std::string, 2> label_pair(const json& j, const std::string& path) {
    const auto v = strings(j, path);
    if (v.size() != 2) {
        fail(path, "expected two setting labels");
    }
    return {v[0], v[1]};
}

CheckType check_type(const std::string& name, const std::string& path) {
    for (auto t : {CheckType::chsh, CheckType::bell, CheckType::bell_restriction, CheckType::local_realism,
                   CheckType::quantum_bell_analog, CheckType::separable_bell}) {
        if (name == check_type_name(t)) {
            return t;
        }
    }
    fail(path, "unknown check type \"" + name + "\"");
}

bool quantum_bell_family(CheckType t) {
    return t == CheckType::quantum_bell_analog || t == CheckType::separable_bell;
}

CheckSpec check(const json& j, const std::string& path, ScenarioKind kind) {
    CheckSpec c;
    c.type = check_type(text(require(j, path, "type"), at(path, "type")), at(path, "type"));
    if (has(j, "tol")) {
        c.tol = number(j.at("tol"), at(path, "tol"));
    }
    if (has(j, "sign")) {
        const std::string s = text(j.at("sign"), at(path, "sign"));
        c.sign = guarded(at(path, "sign"), [&] { return parse_sign(s); });
    }
    switch (c.type) {
        case CheckType::chsh:
            if (has(j, "alice")) {
                c.alice = label_pair(j.at("alice"), at(path, "alice"));
            }
            if (has(j, "bob")) {
                c.bob = label_pair(j.at("bob"), at(path, "bob"));
            }
            c.coeffs = coefficients(j, path);
            if (has(j, "use_decomposition")) {
                c.use_decomposition = boolean(j.at("use_decomposition"), at(path, "use_decomposition"));
            }
            break;
        case CheckType::bell:
        case CheckType::bell_restriction:
            if (kind == ScenarioKind::info) {
                c.a_b1 = setting_pair(require(j, path, "a_b1"), at(path, "a_b1"));
                c.a_b2 = setting_pair(require(j, path, "a_b2"), at(path, "a_b2"));
                c.b1_b2 = setting_pair(require(j, path, "b1_b2"), at(path, "b1_b2"));
                break;
            }
            if (c.type == CheckType::bell_restriction) {
                fail(at(path, "type"), "bell_restriction applies to information-model scenarios");
            }
            [[fallthrough]];
        case CheckType::quantum_bell_analog:
        case CheckType::separable_bell:
            if (kind != ScenarioKind::quantum) {
                fail(at(path, "type"), std::string(check_type_name(c.type)) + " applies to quantum scenarios");
            }
            c.alice_a = text(require(j, path, "alice_a"), at(path, "alice_a"));
            c.alice_b1 = text(require(j, path, "alice_b1"), at(path, "alice_b1"));
            c.bob_b1 = text(require(j, path, "bob_b1"), at(path, "bob_b1"));
            c.bob_b2 = text(require(j, path, "bob_b2"), at(path, "bob_b2"));
            break;
        case CheckType::local_realism:
            if (has(j, "symmetrized")) {
                c.symmetrized = boolean(j.at("symmetrized"), at(path, "symmetrized"));
            }
            break;
    }
    return c;
}

json check_to_json(const CheckSpec& c, ScenarioKind kind) {
    json j{{"type", check_type_name(c.type)}};
    if (c.tol) {
        j["tol"] = *c.tol;
    }
    switch (c.type) {
        case CheckType::chsh:
            j["alice"] = c.alice;
            j["bob"] = c.bob;
            coefficients_to_json(j, c.coeffs);
            if (kind == ScenarioKind::quantum) {
                j["use_decomposition"] = c.use_decomposition;
            }
            break;
        case CheckType::bell:
        case CheckType::bell_restriction:
            j["sign"] = sign_symbol(c.sign);
            if (kind == ScenarioKind::info) {
                j["a_b1"] = {c.a_b1.first, c.a_b1.second};
                j["a_b2"] = {c.a_b2.first, c.a_b2.second};
                j["b1_b2"] = {c.b1_b2.first, c.b1_b2.second};
                break;
            }
            [[fallthrough]];
        case CheckType::quantum_bell_analog:
        case CheckType::separable_bell:
            j["alice_a"] = c.alice_a;
            j["alice_b1"] = c.alice_b1;
            j["bob_b1"] = c.bob_b1;
            j["bob_b2"] = c.bob_b2;
            break;
        case CheckType::local_realism:
            if (kind == ScenarioKind::quantum) {
                j["symmetrized"] = c.symmetrized;
            }
            break;
    }
    return j;
}

void require_labels(const Scenario& s, const CheckSpec& c, const std::string& path) {
    if (s.kind == ScenarioKind::info) {
        const auto map = s.observable_map();
        auto need = [&](const SettingPair& key) {
            if (!map.contains(key)) {
                fail(path, "no observable for setting pair (" + key.first + ", " + key.second + ")");
            }
        };
        if (c.type == CheckType::chsh) {
            for (const auto& a : c.alice) {
                for (const auto& b : c.bob) {
                    need({a, b});
                }
            }
        } else if (c.type == CheckType::bell || c.type == CheckType::bell_restriction) {
            need(c.a_b1);
            need(c.a_b2);
            need(c.b1_b2);
        }
        return;
    }
    auto need = [&](const std::map<std::string, PovMeasure>& side, const std::string& label, const char* who) {
        if (!side.contains(label)) {
            fail(path, std::string("no ") + who + " POV labelled \"" + label + "\"");
        }
    };
    if (c.type == CheckType::chsh) {
        for (const auto& a : c.alice) {
            need(s.alice, a, "alice");
        }
        for (const auto& b : c.bob) {
            need(s.bob, b, "bob");
        }
    } else if (c.type == CheckType::bell || quantum_bell_family(c.type)) {
        need(s.alice, c.alice_a, "alice");
        need(s.alice, c.alice_b1, "alice");
        need(s.bob, c.bob_b1, "bob");
        need(s.bob, c.bob_b2, "bob");
    }
    if (quantum_bell_family(c.type)) {
        for (std::size_t i = 0; i < s.states.size(); ++i) {
            if (!s.states[i].decomposition) {
                fail(at(at("/states", i), "decomposition"),
                     std::string(check_type_name(c.type)) + " needs a decomposition for every state");
            }
        }
    }
}

double json_distance(const json& a, const json& b) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    if (a.is_number() && b.is_number()) {
        return std::abs(a.get<double>() - b.get<double>());
    }
    if (a.type() != b.type()) {
        return kInf;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) {
            return kInf;
        }
        double d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            d = std::max(d, json_distance(a[i], b[i]));
        }
        return d;
    }
    if (a.is_object()) {
        if (a.size() != b.size()) {
            return kInf;
        }
        double d = 0;
        for (const auto& [key, value] : a.items()) {
            if (!b.contains(key)) {
                return kInf;
            }
            d = std::max(d, json_distance(value, b.at(key)));
        }
        return d;
    }
    return a == b ? 0.0 : kInf;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

const char* check_type_name(CheckType t) {
    switch (t) {
        case CheckType::chsh:
            return "chsh";
        case CheckType::bell:
            return "bell";
        case CheckType::bell_restriction:
            return "bell_restriction";
        case CheckType::local_realism:
            return "local_realism";
        case CheckType::quantum_bell_analog:
            return "quantum_bell_analog";
        case CheckType::separable_bell:
            return "separable_bell";
    }
    return "chsh";
}

std::map<SettingPair, JointObservable> Scenario::observable_map() const {
    std::map<SettingPair, JointObservable> out;
    for (const auto& e : observables) {
        out.emplace(SettingPair{e.alice, e.bob}, e.joint);
    }
    return out;
}

const JointObservable& Scenario::observable(const SettingPair& key) const {
    for (const auto& e : observables) {
        if (e.alice == key.first && e.bob == key.second) {
            return e.joint;
        }
    }
    throw ScenarioError("no observable for setting pair (" + key.first + ", " + key.second + ")");
}

Scenario parse_scenario(const json& doc) {
    if (!doc.is_object()) {
        fail("", "scenario must be a JSON object");
    }
    Scenario s;
    if (has(doc, "name")) {
        s.name = text(doc.at("name"), "/name");
    }
    if (has(doc, "description")) {
        s.description = text(doc.at("description"), "/description");
    }
    const std::string kind = text(require(doc, "", "kind"), "/kind");
    if (kind == "info") {
        s.kind = ScenarioKind::info;
    } else if (kind == "quantum") {
        s.kind = ScenarioKind::quantum;
    } else {
        fail("/kind", "kind must be \"info\" or \"quantum\"");
    }
    if (has(doc, "tolerance")) {
        s.tolerance = number(doc.at("tolerance"), "/tolerance");
        if (!(s.tolerance >= 0)) {
            fail("/tolerance", "tolerance must be non-negative");
        }
    }

    if (s.kind == ScenarioKind::info) {
        s.theta = information_state(require(doc, "", "theta"), "/theta");
        const json& oj = array_at(require(doc, "", "observables"), "/observables");
        for (std::size_t i = 0; i < oj.size(); ++i) {
            const std::string p = at("/observables", i);
            InfoObservableEntry e{text(require(oj[i], p, "a"), at(p, "a")), text(require(oj[i], p, "b"), at(p, "b")),
                                  joint_observable(oj[i], p, *s.theta)};
            if (e.joint.theta_size() != s.theta->size()) {
                fail(p, "observable is defined on " + std::to_string(e.joint.theta_size()) +
                            " points but Theta has " + std::to_string(s.theta->size()));
            }
            for (const auto& other : s.observables) {
                if (other.alice == e.alice && other.bob == e.bob) {
                    fail(p, "duplicate observable for setting pair (" + e.alice + ", " + e.bob + ")");
                }
            }
            s.observables.push_back(std::move(e));
        }
    } else {
        const json& sj = array_at(require(doc, "", "states"), "/states");
        if (sj.empty()) {
            fail("/states", "at least one state is required");
        }
        for (std::size_t i = 0; i < sj.size(); ++i) {
            const std::string p = at("/states", i);
            const std::string name =
                has(sj[i], "name") ? text(sj[i].at("name"), at(p, "name")) : "state" + std::to_string(i);
            std::optional<SeparableDecomposition> dec;
            if (has(sj[i], "decomposition")) {
                dec = decomposition(sj[i].at("decomposition"), at(p, "decomposition"));
            }
            // "separable": true takes the state from its decomposition.
            const bool assembled = has(sj[i], "separable") && boolean(sj[i].at("separable"), at(p, "separable"));
            if (assembled && !dec) {
                fail(at(p, "separable"), "a separable state needs a decomposition");
            }
            NamedState ns{name, assembled ? assemble_separable(*dec) : density(sj[i], p), std::move(dec)};
            if (ns.decomposition && ns.decomposition->dim() * ns.decomposition->dim() != ns.rho.dim()) {
                fail(at(p, "decomposition"), "decomposition factors do not match the state dimension");
            }
            for (const auto& other : s.states) {
                if (other.name == ns.name) {
                    fail(at(p, "name"), "duplicate state name \"" + ns.name + "\"");
                }
            }
            s.states.push_back(std::move(ns));
        }
        s.alice = pov_map(require(doc, "", "alice"), "/alice");
        s.bob = pov_map(require(doc, "", "bob"), "/bob");
    }

    if (has(doc, "checks")) {
        const json& cj = array_at(doc.at("checks"), "/checks");
        for (std::size_t i = 0; i < cj.size(); ++i) {
            s.checks.push_back(check(cj[i], at("/checks", i), s.kind));
        }
    }
    for (std::size_t i = 0; i < s.checks.size(); ++i) {
        require_labels(s, s.checks[i], at("/checks", i));
    }

    if (has(doc, "simulation")) {
        const json& j = doc.at("simulation");
        SimulationSpec sim;
        if (has(j, "n")) {
            sim.n = unsigned_number(j.at("n"), "/simulation/n");
            if (sim.n == 0) {
                fail("/simulation/n", "sample count must be at least 1");
            }
        }
        if (has(j, "seed")) {
            sim.seed = unsigned_number(j.at("seed"), "/simulation/seed");
        }
        if (has(j, "symmetrized")) {
            sim.symmetrized = boolean(j.at("symmetrized"), "/simulation/symmetrized");
        }
        s.simulation = sim;
    }
    if (has(doc, "search")) {
        if (s.kind != ScenarioKind::quantum) {
            fail("/search", "search applies to quantum scenarios");
        }
        const json& j = doc.at("search");
        SearchSpec spec;
        spec.coeffs = coefficients(j, "/search");
        if (has(j, "polar_steps")) {
            spec.budget.polar_steps = small_int(j.at("polar_steps"), "/search/polar_steps");
        }
        if (has(j, "azimuth_steps")) {
            spec.budget.azimuth_steps = small_int(j.at("azimuth_steps"), "/search/azimuth_steps");
        }
        if (has(j, "max_rounds")) {
            spec.budget.max_rounds = small_int(j.at("max_rounds"), "/search/max_rounds");
        }
        if (has(j, "random_starts")) {
            spec.budget.random_starts = small_int(j.at("random_starts"), "/search/random_starts");
        }
        if (has(j, "convergence")) {
            spec.budget.convergence = number(j.at("convergence"), "/search/convergence");
        }
        if (has(j, "seed")) {
            spec.seed = unsigned_number(j.at("seed"), "/search/seed");
        }
        if (spec.budget.polar_steps < 1 || spec.budget.azimuth_steps < 1) {
            fail("/search", "grid sizes must be at least 1");
        }
        s.search = spec;
    }
    return s;
}

Scenario parse_scenario_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                            ": JSON syntax error: " + e.what());
    }
    return parse_scenario(doc);
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ScenarioError(path + ": cannot open scenario file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scenario_text(buffer.str());
    } catch (const ScenarioError& e) {
        throw ScenarioError(path + ":" + e.what());
    }
}

json to_json(const Scenario& s) {
    json doc;
    doc["name"] = s.name;
    if (!s.description.empty()) {
        doc["description"] = s.description;
    }
    doc["kind"] = s.kind == ScenarioKind::info ? "info" : "quantum";
    doc["tolerance"] = s.tolerance;
    if (s.kind == ScenarioKind::info) {
        doc["theta"] = {{"labels", s.theta->labels()}, {"pi", s.theta->pi()}};
        json obs = json::array();
        for (const auto& e : s.observables) {
            obs.push_back(joint_to_json(e));
        }
        doc["observables"] = std::move(obs);
    } else {
        json states = json::array();
        for (const auto& ns : s.states) {
            json j{{"name", ns.name}, {"matrix", matrix_to_json(ns.rho.matrix())}};
            if (ns.decomposition) {
                j["decomposition"] = decomposition_to_json(*ns.decomposition);
            }
            states.push_back(std::move(j));
        }
        doc["states"] = std::move(states);
        json alice = json::object();
        for (const auto& [label, m] : s.alice) {
            alice[label] = pov_to_json(m);
        }
        json bob = json::object();
        for (const auto& [label, m] : s.bob) {
            bob[label] = pov_to_json(m);
        }
        doc["alice"] = std::move(alice);
        doc["bob"] = std::move(bob);
    }
    json checks = json::array();
    for (const auto& c : s.checks) {
        checks.push_back(check_to_json(c, s.kind));
    }
    doc["checks"] = std::move(checks);
    if (s.simulation) {
        doc["simulation"] = {{"n", s.simulation->n}, {"seed", s.simulation->seed}};
        if (s.kind == ScenarioKind::quantum) {
            doc["simulation"]["symmetrized"] = s.simulation->symmetrized;
        }
    }
    if (s.search) {
        json j{{"polar_steps", s.search->budget.polar_steps},
               {"azimuth_steps", s.search->budget.azimuth_steps},
               {"max_rounds", s.search->budget.max_rounds},
               {"random_starts", s.search->budget.random_starts},
               {"convergence", s.search->budget.convergence},
               {"seed", s.search->seed}};
        coefficients_to_json(j, s.search->coeffs);
        doc["search"] = std::move(j);
    }
    return doc;
}

double scenario_distance(const Scenario& a, const Scenario& b) { return json_distance(to_json(a), to_json(b)); }

}  // namespace locreal
