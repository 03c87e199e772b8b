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

#include "locreal/inequalities.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "locreal/errors.h"

namespace locreal {
namespace {

constexpr double kMatchTolerance = 1e-9;

bool rows_match(const GeneralizedObservable& x, const GeneralizedObservable& y, std::span<const std::size_t> rows) {
    if (x.theta_size() != y.theta_size() || !(x.outcomes() == y.outcomes())) {
        return false;
    }
    for (std::size_t t : rows) {
        const auto rx = x.kernel().row(t);
        const auto ry = y.kernel().row(t);
        for (std::size_t c = 0; c < rx.size(); ++c) {
            if (std::abs(rx[c] - ry[c]) > kMatchTolerance) {
                return false;
            }
        }
    }
    return true;
}

bool same_nu(const Factorization& x, const Factorization& y) {
    if (x.nu.size() != y.nu.size()) {
        return false;
    }
    for (std::size_t w = 0; w < x.nu.size(); ++w) {
        if (std::abs(x.nu[w] - y.nu[w]) > 1e-12) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> all_rows(std::size_t n) {
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = i;
    }
    return rows;
}

// Side-`side` component omega of `j` matches the same component of `k`, for
// every omega with positive weight.
bool components_agree(const Factorization& j, const Factorization& k, Side side, std::span<const std::size_t> rows) {
    for (std::size_t w = 0; w < j.nu.size(); ++w) {
        if (j.nu[w] <= 0) {
            continue;
        }
        const auto& x = side == Side::first ? j.components[w].first : j.components[w].second;
        const auto& y = side == Side::first ? k.components[w].first : k.components[w].second;
        if (!rows_match(x, y, rows)) {
            return false;
        }
    }
    return true;
}

void require_unit_bound(const OutcomeSet& o, const char* what) {
    if (o.bound() > 1.0) {
        throw DomainError(std::string(what) + ": outcomes must be bounded by 1");
    }
}

// Validates the shared-nu structure of a Bell triple and returns the three
// factorizations in order (a,b1), (a,b2), (b1,b2).
std::array<const Factorization*, 3> shared_family(const InfoBellTriple& triple, const InformationState& state) {
    const std::array<const JointObservable*, 3> obs{&triple.a_b1, &triple.a_b2, &triple.b1_b2};
    std::array<const Factorization*, 3> f{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (obs[i]->theta_size() != state.size()) {
            throw DimensionError("Bell triple: observable and state are defined on different Theta");
        }
        if (!obs[i]->factorization()) {
            throw HypothesisError("Bell triple: opaque joint observable, marginal match is not checkable");
        }
        f[i] = &*obs[i]->factorization();
        if (!f[i]->covers(state.support())) {
            throw HypothesisError("Bell triple: state support lies outside the factorization set");
        }
    }
    if (!same_nu(*f[0], *f[1]) || !same_nu(*f[0], *f[2])) {
        throw HypothesisError("Bell triple: the three observables do not share one nu");
    }
    const auto& rows = state.support();
    if (!components_agree(*f[0], *f[1], Side::first, rows)) {
        throw HypothesisError("Bell triple: side-1 components for setting a differ between (a,b1) and (a,b2)");
    }
    if (!components_agree(*f[1], *f[2], Side::second, rows)) {
        throw HypothesisError("Bell triple: side-2 components for setting b2 differ between (a,b2) and (b1,b2)");
    }
    return f;
}

}  // namespace

const char* constraint_class_name(ConstraintClass c) {
    switch (c) {
        case ConstraintClass::row:
            return "row";
        case ConstraintClass::column:
            return "column";
        case ConstraintClass::none:
            return "none";
    }
    return "none";
}

ChshCoefficients::ChshCoefficients(Matrix2 gamma, ConstraintClass declared) : gamma_(gamma), class_(declared) {
    for (const auto& row : gamma_) {
        for (double g : row) {
            if (!std::isfinite(g) || std::abs(g) > 1.0) {
                throw DomainError("ChshCoefficients: |gamma_km| must not exceed 1");
            }
        }
    }
    const double row_gap = std::abs(gamma_[0][0] * gamma_[0][1] + gamma_[1][0] * gamma_[1][1]);
    const double col_gap = std::abs(gamma_[0][0] * gamma_[1][0] + gamma_[0][1] * gamma_[1][1]);
    if ((declared == ConstraintClass::row && row_gap > 1e-12) ||
        (declared == ConstraintClass::column && col_gap > 1e-12)) {
        throw DomainError(std::string("ChshCoefficients: declared ") + constraint_class_name(declared) +
                          " constraint does not hold");
    }
}

ChshCoefficients ChshCoefficients::classify(Matrix2 gamma) {
    const double row_gap = std::abs(gamma[0][0] * gamma[0][1] + gamma[1][0] * gamma[1][1]);
    const double col_gap = std::abs(gamma[0][0] * gamma[1][0] + gamma[0][1] * gamma[1][1]);
    if (row_gap <= 1e-12) {
        return ChshCoefficients(gamma, ConstraintClass::row);
    }
    if (col_gap <= 1e-12) {
        return ChshCoefficients(gamma, ConstraintClass::column);
    }
    return ChshCoefficients(gamma, ConstraintClass::none);
}

ChshCoefficients ChshCoefficients::standard() { return ChshCoefficients({{{1, 1}, {1, -1}}}, ConstraintClass::row); }

double chsh_functional(const Matrix2& correlations, const ChshCoefficients& coeffs) {
    double value = 0;
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            const double e = correlations[k][m];
            if (!std::isfinite(e) || std::abs(e) > 1.0 + kMatchTolerance) {
                throw DomainError("chsh_functional: correlation outside [-1, 1]");
            }
            value += coeffs.gamma()[k][m] * e;
        }
    }
    return value;
}

const JointObservable& InfoChshFamily::at(int k, int m) const {
    if (k == 0) {
        return m == 0 ? a1_b1 : a1_b2;
    }
    return m == 0 ? a2_b1 : a2_b2;
}

bool is_factorizable_family(const InfoChshFamily& family, const InformationState& state) {
    std::array<std::array<const Factorization*, 2>, 2> f{};
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            const auto& obs = family.at(k, m);
            if (!obs.factorization() || !obs.factorization()->covers(state.support())) {
                return false;
            }
            f[k][m] = &*obs.factorization();
        }
    }
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            if (!same_nu(*f[0][0], *f[k][m])) {
                return false;
            }
        }
    }
    const auto& rows = state.support();
    return components_agree(*f[0][0], *f[0][1], Side::first, rows) &&
           components_agree(*f[1][0], *f[1][1], Side::first, rows) &&
           components_agree(*f[0][0], *f[1][0], Side::second, rows) &&
           components_agree(*f[0][1], *f[1][1], Side::second, rows);
}

namespace {

InequalityReport chsh_report(const Matrix2& e, const ChshCoefficients& coeffs, double tol) {
    const double value = chsh_functional(e, coeffs);
    if (coeffs.constraint_class() == ConstraintClass::none) {
        auto report = InequalityReport::functional_only("extended_chsh", std::abs(value), tol);
        report.conditions_checked.emplace_back("coefficient_constraint", false);
        report.detail = "coefficients satisfy neither product constraint; bound not asserted";
        return report;
    }
    auto report = InequalityReport::make("extended_chsh", std::abs(value), 2.0, tol);
    report.conditions_checked.emplace_back("coefficient_constraint", true);
    return report;
}

}  // namespace

InequalityReport check_extended_chsh(const InfoChshFamily& family, const InformationState& state,
                                     const ChshCoefficients& coeffs, double tol) {
    Matrix2 e{};
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            require_unit_bound(family.at(k, m).outcomes1(), "check_extended_chsh");
            require_unit_bound(family.at(k, m).outcomes2(), "check_extended_chsh");
            e[k][m] = expectation_values(family.at(k, m), state).e12;
        }
    }
    auto report = chsh_report(e, coeffs, tol);
    const bool factorizable = is_factorizable_family(family, state);
    report.conditions_checked.emplace_back("factorizable_family", factorizable);
    if (!report.satisfied) {
        if (factorizable) {
            throw InvariantError("check_extended_chsh: factorizable family violates the CHSH-form bound");
        }
        report.detail = "joint observables do not have the factorizable form on the state's support";
    }
    return report;
}

InequalityReport check_extended_chsh(const DensityOperator& rho, const QuantumChshSettings& settings,
                                     const ChshCoefficients& coeffs,
                                     const std::optional<SeparableDecomposition>& decomposition, double tol) {
    Matrix2 e{};
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            require_unit_bound(settings.alice(k).outcomes(), "check_extended_chsh");
            require_unit_bound(settings.bob(m).outcomes(), "check_extended_chsh");
            e[k][m] = correlation(rho, settings.alice(k), settings.bob(m));
        }
    }
    auto report = chsh_report(e, coeffs, tol);
    bool separable = false;
    if (decomposition) {
        const DensityOperator eta = assemble_separable(*decomposition);
        if (eta.dim() != rho.dim()) {
            throw DimensionError("check_extended_chsh: decomposition acts on a different space");
        }
        separable = trace_norm(rho.matrix() - eta.matrix()) <= kMatchTolerance;
    }
    report.conditions_checked.emplace_back("separable_state", separable);
    if (!report.satisfied) {
        if (separable) {
            throw InvariantError("check_extended_chsh: separable state violates the CHSH-form bound");
        }
        report.detail = "Alice/Bob observables admit no factorizable representation on this state";
    }
    return report;
}

bool check_condition_marginal_match(const InfoBellTriple& triple, const InformationState& state, Sign sign) {
    const auto f = shared_family(triple, state);
    const double s = sign_value(sign);
    for (std::size_t w = 0; w < f[0]->nu.size(); ++w) {
        if (f[0]->nu[w] <= 0) {
            continue;
        }
        const auto f2_b1 = f[0]->components[w].second.mean_function();
        const auto f1_b1 = f[2]->components[w].first.mean_function();
        for (std::size_t t : state.support()) {
            if (std::abs(f2_b1[t] - s * f1_b1[t]) > kMatchTolerance) {
                return false;
            }
        }
    }
    return true;
}

double bell_b1b1_correlation(const InfoBellTriple& triple, const InformationState& state) {
    const auto f = shared_family(triple, state);
    double e = 0;
    for (std::size_t w = 0; w < f[0]->nu.size(); ++w) {
        const auto f2_b1 = f[0]->components[w].second.mean_function();
        const auto f1_b1 = f[2]->components[w].first.mean_function();
        for (std::size_t t : state.support()) {
            e += state.pi()[t] * f[0]->nu[w] * f1_b1[t] * f2_b1[t];
        }
    }
    return e;
}

bool check_bell_correlation_restriction(double e_b1b1, Sign sign) {
    return std::abs(e_b1b1 - sign_value(sign)) <= kMatchTolerance;
}

InequalityReport check_bell(const InfoBellTriple& triple, const InformationState& state, Sign sign, double tol) {
    for (const auto* obs : {&triple.a_b1, &triple.a_b2, &triple.b1_b2}) {
        require_unit_bound(obs->outcomes1(), "check_bell");
        require_unit_bound(obs->outcomes2(), "check_bell");
    }
    const double e_ab1 = expectation_values(triple.a_b1, state).e12;
    const double e_ab2 = expectation_values(triple.a_b2, state).e12;
    const double e_b1b2 = expectation_values(triple.b1_b2, state).e12;
    auto report = InequalityReport::make("bell", std::abs(e_ab1 - e_ab2), 1.0 - sign_value(sign) * e_b1b2, tol);
    report.sign = sign_symbol(sign);

    bool condition = false;
    try {
        condition = check_condition_marginal_match(triple, state, sign);
        report.conditions_checked.emplace_back("marginal_match", condition);
        const double e_b1b1 = bell_b1b1_correlation(triple, state);
        report.conditions_checked.emplace_back("bell_correlation_restriction",
                                               check_bell_correlation_restriction(e_b1b1, sign));
        std::ostringstream os;
        os.precision(17);
        os << "E(b1,b1) = " << e_b1b1;
        report.detail = os.str();
    } catch (const HypothesisError& e) {
        report.conditions_checked.emplace_back("marginal_match_checkable", false);
        report.detail = e.what();
    }
    if (condition && !report.satisfied) {
        throw InvariantError("check_bell: marginal match holds but the Bell inequality fails");
    }
    return report;
}

InequalityReport check_bell(const DensityOperator& rho, const QuantumBellSettings& settings, Sign sign, double tol) {
    for (const auto* m : {&settings.alice_a, &settings.alice_b1, &settings.bob_b1, &settings.bob_b2}) {
        require_unit_bound(m->outcomes(), "check_bell");
    }
    const double e_ab1 = correlation(rho, settings.alice_a, settings.bob_b1);
    const double e_ab2 = correlation(rho, settings.alice_a, settings.bob_b2);
    const double e_b1b2 = correlation(rho, settings.alice_b1, settings.bob_b2);
    auto report = InequalityReport::make("bell", std::abs(e_ab1 - e_ab2), 1.0 - sign_value(sign) * e_b1b2, tol);
    report.sign = sign_symbol(sign);
    const ComplexMatrix a1 = correlation_operator(settings.alice_b1) * Complex(sign_value(sign));
    const ComplexMatrix a2 = correlation_operator(settings.bob_b1);
    const bool match = a1.rows() == a2.rows() && max_abs_diff(a1, a2) <= kMatchTolerance;
    report.conditions_checked.emplace_back("operator_match", match);
    if (!report.satisfied) {
        report.detail = match ? "Alice/Bob observables admit no factorizable representation on this state"
                              : "operator match A1(b1) = s A2(b1) fails, so the bound is not implied";
    }
    return report;
}

std::string LocalRealismReport::describe() const {
    if (passed) {
        return "every marginal depends only on its own setting";
    }
    std::ostringstream os;
    os << "side-" << side << " marginal for setting " << fixed_setting << " changes between "
       << (side == 1 ? "b=" : "a=") << reference_setting << " and " << (side == 1 ? "b=" : "a=")
       << offending_setting << " (deviation " << max_deviation << ")";
    return os.str();
}

InequalityReport LocalRealismReport::to_report(double tol) const {
    auto report = InequalityReport::make("local_realism", max_deviation, 0.0, tol);
    report.conditions_checked.emplace_back("marginals_setting_independent", passed);
    report.conditions_checked.emplace_back("state_level_marginals", state_level_passed);
    report.detail = describe();
    return report;
}

namespace {

template <typename Joint, typename Compare>
LocalRealismReport scan_family(const std::map<SettingPair, Joint>& family, Compare compare, double tol) {
    std::set<std::string> as;
    std::set<std::string> bs;
    for (const auto& [key, value] : family) {
        as.insert(key.first);
        bs.insert(key.second);
    }
    if (as.size() < 2 || bs.size() < 2) {
        throw HypothesisError("check_local_realism: need at least two settings on each side, inconclusive");
    }
    LocalRealismReport report;
    auto visit = [&](int side, const std::string& fixed, const std::vector<const Joint*>& members,
                     const std::vector<std::string>& labels) {
        for (std::size_t i = 1; i < members.size(); ++i) {
            const double dev = compare(*members.front(), *members[i], side == 1 ? Side::first : Side::second);
            if (dev > report.max_deviation && report.passed) {
                report.max_deviation = dev;
            }
            if (dev > tol && report.passed) {
                report.passed = false;
                report.max_deviation = dev;
                report.side = side;
                report.fixed_setting = fixed;
                report.reference_setting = labels.front();
                report.offending_setting = labels[i];
            }
        }
    };
    for (const auto& a : as) {
        std::vector<const Joint*> members;
        std::vector<std::string> labels;
        for (const auto& b : bs) {
            if (auto it = family.find({a, b}); it != family.end()) {
                members.push_back(&it->second);
                labels.push_back(b);
            }
        }
        visit(1, a, members, labels);
    }
    for (const auto& b : bs) {
        std::vector<const Joint*> members;
        std::vector<std::string> labels;
        for (const auto& a : as) {
            if (auto it = family.find({a, b}); it != family.end()) {
                members.push_back(&it->second);
                labels.push_back(a);
            }
        }
        visit(2, b, members, labels);
    }
    return report;
}

}  // namespace

LocalRealismReport check_local_realism(const std::map<SettingPair, JointObservable>& family,
                                       const std::vector<InformationState>& states, double tol) {
    auto kernel_gap = [](const JointObservable& x, const JointObservable& y, Side side) {
        const auto mx = marginal_observable(x, side);
        const auto my = marginal_observable(y, side);
        if (mx.kernel().rows() != my.kernel().rows() || mx.kernel().cols() != my.kernel().cols() ||
            !(mx.outcomes() == my.outcomes())) {
            return std::numeric_limits<double>::infinity();
        }
        return max_abs_diff(mx.kernel(), my.kernel());
    };
    auto report = scan_family(family, kernel_gap, tol);
    for (const auto& state : states) {
        auto dist_gap = [&state](const JointObservable& x, const JointObservable& y, Side side) {
            const auto px = outcome_distribution(marginal_observable(x, side), state);
            const auto py = outcome_distribution(marginal_observable(y, side), state);
            if (px.size() != py.size()) {
                return std::numeric_limits<double>::infinity();
            }
            double m = 0;
            for (std::size_t i = 0; i < px.size(); ++i) {
                m = std::max(m, std::abs(px[i] - py[i]));
            }
            return m;
        };
        if (!scan_family(family, dist_gap, tol).passed) {
            report.state_level_passed = false;
        }
    }
    return report;
}

LocalRealismReport check_local_realism(const std::map<SettingPair, JointPov>& family, double tol) {
    auto element_gap = [](const JointPov& x, const JointPov& y, Side side) {
        const auto mx = marginal_pov(x, side);
        const auto my = marginal_pov(y, side);
        if (mx.elements().size() != my.elements().size() || mx.dim() != my.dim()) {
            return std::numeric_limits<double>::infinity();
        }
        double m = 0;
        for (std::size_t k = 0; k < mx.elements().size(); ++k) {
            m = std::max(m, max_abs_diff(mx.elements()[k], my.elements()[k]));
        }
        return m;
    };
    return scan_family(family, element_gap, tol);
}

bool shares_single_nu(const std::map<SettingPair, JointObservable>& family) {
    const Factorization* reference = nullptr;
    std::map<std::string, const Factorization*> by_a;
    std::map<std::string, const Factorization*> by_b;
    for (const auto& [key, obs] : family) {
        if (!obs.factorization()) {
            return false;
        }
        const auto& f = *obs.factorization();
        if (reference == nullptr) {
            reference = &f;
        } else if (!same_nu(*reference, f)) {
            return false;
        }
        const auto rows = all_rows(obs.theta_size());
        if (auto [it, fresh] = by_a.emplace(key.first, &f); !fresh) {
            if (!components_agree(*it->second, f, Side::first, rows)) {
                return false;
            }
        }
        if (auto [it, fresh] = by_b.emplace(key.second, &f); !fresh) {
            if (!components_agree(*it->second, f, Side::second, rows)) {
                return false;
            }
        }
    }
    return reference != nullptr;
}

namespace {

struct AnalogSetup {
    double e_ab1 = 0;
    double e_ab2 = 0;
};

void require_analog_hypotheses(const DensityOperator& rho, const SeparableDecomposition& dec,
                               const QuantumBellSettings& s) {
    dec.validate();
    const std::size_t d = dec.dim();
    if (rho.dim() != d * d) {
        throw DimensionError("quantum Bell analog: state and decomposition act on different spaces");
    }
    for (const auto* m : {&s.alice_a, &s.alice_b1, &s.bob_b1, &s.bob_b2}) {
        if (m->dim() != d) {
            throw DimensionError("quantum Bell analog: POV dimension differs from the sub-system dimension");
        }
        require_unit_bound(m->outcomes(), "quantum Bell analog");
    }
    if (!is_swap_symmetric(rho.matrix())) {
        throw HypothesisError("quantum Bell analog: state is not symmetric under exchange of the sub-systems");
    }
    if (max_abs_diff(correlation_operator(s.bob_b1), correlation_operator(s.alice_b1)) > kMatchTolerance) {
        throw HypothesisError("quantum Bell analog: A2(b1) != A1(b1), the marginal POV condition is not met");
    }
}

AnalogSetup analog_correlations(const DensityOperator& rho, const QuantumBellSettings& s) {
    return {correlation(rho, s.alice_a, s.bob_b1, true), correlation(rho, s.alice_a, s.bob_b2, true)};
}

}  // namespace

InequalityReport check_quantum_bell_analog(const DensityOperator& rho, const SeparableDecomposition& dec,
                                           const QuantumBellSettings& settings, double tol) {
    require_analog_hypotheses(rho, dec, settings);
    if (!dec.symmetrized && !dec.is_diagonal_form()) {
        throw HypothesisError("quantum Bell analog: decomposition must be of the symmetrized form");
    }
    const auto residual = representation_residual(rho, dec, settings.bob_b1, settings.bob_b2);
    const auto e = analog_correlations(rho, settings);
    const double e_tilde = correlation(residual.eta_tilde, settings.alice_b1, settings.bob_b2, true);
    auto report =
        InequalityReport::make("quantum_bell_analog", std::abs(e.e_ab1 - e.e_ab2), residual.gamma - e_tilde, tol);
    report.conditions_checked.emplace_back("rho_symmetric", true);
    report.conditions_checked.emplace_back("operator_match", true);
    report.conditions_checked.emplace_back("gamma_within_1_plus_2_trace_norm",
                                           residual.gamma <= 1.0 + 2.0 * residual.sigma_trace_norm + tol);
    std::ostringstream os;
    os.precision(17);
    os << "trace_norm(sigma) = " << residual.sigma_trace_norm << ", gamma = " << residual.gamma;
    report.detail = os.str();
    if (!report.satisfied) {
        throw InvariantError("check_quantum_bell_analog: negative margin " + std::to_string(report.margin));
    }
    return report;
}

std::vector<InequalityReport> check_separable_bell(const DensityOperator& rho, const SeparableDecomposition& dec,
                                                   const QuantumBellSettings& settings, double tol) {
    require_analog_hypotheses(rho, dec, settings);
    const DensityOperator eta = assemble_separable(dec);
    const double residual = trace_norm(rho.matrix() - eta.matrix());
    if (residual > kMatchTolerance) {
        throw HypothesisError("check_separable_bell: decomposition leaves residual trace norm " +
                              std::to_string(residual) + "; use check_quantum_bell_analog");
    }
    const auto e = analog_correlations(rho, settings);
    const double lhs = std::abs(e.e_ab1 - e.e_ab2);
    const DensityOperator eta_tilde = assemble_diagonal_companion(dec);

    std::vector<InequalityReport> reports;
    auto separable =
        InequalityReport::make("separable_bell", lhs, 1.0 - correlation(eta_tilde, settings.alice_b1, settings.bob_b2, true), tol);
    separable.conditions_checked.emplace_back("decomposition_reproduces_rho", true);
    separable.conditions_checked.emplace_back("operator_match", true);
    reports.push_back(std::move(separable));
    if (dec.is_diagonal_form()) {
        auto perfect = InequalityReport::make("perfect_correlation_bell", lhs,
                                              1.0 - correlation(rho, settings.alice_b1, settings.bob_b2, true), tol);
        perfect.conditions_checked.emplace_back("diagonal_product_form", true);
        perfect.conditions_checked.emplace_back("operator_match", true);
        std::ostringstream os;
        os.precision(17);
        os << "E(b1,b1) = " << correlation(rho, settings.alice_b1, settings.bob_b1, true);
        perfect.detail = os.str();
        reports.push_back(std::move(perfect));
    }
    for (const auto& r : reports) {
        if (!r.satisfied) {
            throw InvariantError("check_separable_bell: separable state violates " + r.name);
        }
    }
    return reports;
}

InequalityReport lemma1_bound(double e_ab1, double e_ab2, double gamma1, double gamma2, double e_tilde, double c1,
                              double c2, double tol) {
    if (std::abs(gamma1) > 1.0 || std::abs(gamma2) > 1.0) {
        throw DomainError("lemma1_bound: |gamma_i| must not exceed 1");
    }
    if (!(c1 > 0) || !(c2 > 0)) {
        throw DomainError("lemma1_bound: outcome bounds must be positive");
    }
    return InequalityReport::make("pair_difference_bound", std::abs(gamma1 * e_ab1 + gamma2 * e_ab2),
                                  c1 * c2 + gamma1 * gamma2 * (c1 / c2) * e_tilde, tol);
}

double tilde_correlation(const GeneralizedObservable& p2_b1, const GeneralizedObservable& p2_b2,
                         const InformationState& state) {
    if (p2_b1.theta_size() != state.size() || p2_b2.theta_size() != state.size()) {
        throw DimensionError("tilde_correlation: observables and state are defined on different Theta");
    }
    const auto f1 = p2_b1.mean_function();
    const auto f2 = p2_b2.mean_function();
    double e = 0;
    for (std::size_t t : state.support()) {
        e += state.pi()[t] * f1[t] * f2[t];
    }
    return e;
}

}  // namespace locreal
