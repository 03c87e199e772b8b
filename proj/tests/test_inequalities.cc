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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.h"
#include "locreal/errors.h"
#include "locreal/inequalities.h"
#include "locreal/violation_search.h"

namespace locreal {
namespace {

const double kSqrt2 = std::numbers::sqrt2;

PovMeasure spin(double degrees) { return qubit_projective_pov(QubitSetting::in_xz_plane(degrees)); }

JointObservable image(std::vector<double> f1, std::vector<double> f2) { return make_image_observable(f1, f2); }

const ChshCoefficients kAlternate({{{1, -1}, {1, 1}}}, ConstraintClass::row);

TEST(ChshCoefficients, Validation) {
    EXPECT_THROW(ChshCoefficients({{{1.5, 0}, {0, 0}}}, ConstraintClass::none), DomainError);
    EXPECT_THROW(ChshCoefficients({{{1, 1}, {1, 1}}}, ConstraintClass::row), DomainError);
    EXPECT_THROW(ChshCoefficients({{{1, 1}, {1, 1}}}, ConstraintClass::column), DomainError);
    EXPECT_EQ(ChshCoefficients::classify({{{1, 1}, {1, 1}}}).constraint_class(), ConstraintClass::none);
    EXPECT_EQ(ChshCoefficients::classify({{{1, 1}, {0, 0}}}).constraint_class(), ConstraintClass::column);
    EXPECT_EQ(ChshCoefficients::classify({{{1, 1}, {-1, 1}}}).constraint_class(), ConstraintClass::row);
    EXPECT_EQ(ChshCoefficients::standard().constraint_class(), ConstraintClass::row);
    EXPECT_EQ(ChshCoefficients::standard().gamma(), (Matrix2{{{1, 1}, {1, -1}}}));
}

TEST(ChshFunctional, Oracles) {
    const auto standard = ChshCoefficients::standard();
    EXPECT_EQ(chsh_functional(Matrix2{}, standard), 0.0);
    EXPECT_EQ(chsh_functional({{{1, 1}, {1, 1}}}, standard), 2.0);
    EXPECT_THROW(chsh_functional({{{1.1, 0}, {0, 0}}}, standard), DomainError);
}

Matrix2 singlet_matrix(std::array<double, 2> alice, std::array<double, 2> bob) {
    Matrix2 e{};
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            e[k][m] = correlation(singlet_state(), spin(alice[k]), spin(bob[m]));
        }
    }
    return e;
}

TEST(ChshFunctional, SingletCanonicalAngles) {
    // Bob's pair {45, -45} pairs with (+,+,+,-); {45, 135} pairs with (+,-,+,+).
    EXPECT_NEAR(std::abs(chsh_functional(singlet_matrix({0, 90}, {45, -45}), ChshCoefficients::standard())),
                2 * kSqrt2, 1e-12);
    EXPECT_NEAR(std::abs(chsh_functional(singlet_matrix({0, 90}, {45, 135}), kAlternate)), 2 * kSqrt2, 1e-12);
    EXPECT_NEAR(chsh_functional(singlet_matrix({0, 90}, {45, 135}), ChshCoefficients::standard()), 0.0, 1e-12);
}

TEST(ExtendedChsh, ProductFamilySatisfied) {
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const std::size_t theta = 1 + rng.below(5);
        std::array<GeneralizedObservable, 2> p1{testing::random_observable(testing::random_outcome_set(rng), theta, rng),
                                                testing::random_observable(testing::random_outcome_set(rng), theta, rng)};
        std::array<GeneralizedObservable, 2> p2{testing::random_observable(testing::random_outcome_set(rng), theta, rng),
                                                testing::random_observable(testing::random_outcome_set(rng), theta, rng)};
        const InfoChshFamily family{make_product_observable(p1[0], p2[0]), make_product_observable(p1[0], p2[1]),
                                    make_product_observable(p1[1], p2[0]), make_product_observable(p1[1], p2[1])};
        const auto coeffs = testing::random_constrained_coefficients(rng);
        const auto r = check_extended_chsh(family, testing::random_state(theta, rng), coeffs);
        EXPECT_GE(r.margin, -1e-9);
        EXPECT_TRUE(*r.condition("factorizable_family"));
    }
}

TEST(ExtendedChsh, RandomFactorizableFamiliesSatisfied) {
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const auto sc = testing::random_factorizable_chsh(rng);
        const auto r = check_extended_chsh(sc.family, sc.state, testing::random_constrained_coefficients(rng));
        EXPECT_GE(r.margin, -1e-9);
        EXPECT_TRUE(*r.condition("factorizable_family"));
    }
}

TEST(ExtendedChsh, ClassicalImageSatisfied) {
    const std::vector<double> a1{1, -1, 1, -1};
    const std::vector<double> a2{1, 1, -1, -1};
    const std::vector<double> b1{-1, 1, 1, -1};
    const std::vector<double> b2{1, 1, 1, -1};
    const InfoChshFamily family{image(a1, b1), image(a1, b2), image(a2, b1), image(a2, b2)};
    const auto r = check_extended_chsh(family, InformationState({}, {0.1, 0.2, 0.3, 0.4}), ChshCoefficients::standard());
    EXPECT_TRUE(r.satisfied);
    EXPECT_TRUE(*r.condition("factorizable_family"));
}

TEST(ExtendedChsh, DeterministicStrategiesSaturate) {
    double best = 0;
    for (int bits = 0; bits < 16; ++bits) {
        auto v = [&](int k) { return std::vector<double>{(bits >> k & 1) != 0 ? 1.0 : -1.0}; };
        const InfoChshFamily family{image(v(0), v(2)), image(v(0), v(3)), image(v(1), v(2)), image(v(1), v(3))};
        const auto r = check_extended_chsh(family, InformationState::uniform(1), ChshCoefficients::standard());
        EXPECT_GE(r.margin, -1e-15);
        best = std::max(best, r.lhs);
    }
    EXPECT_EQ(best, 2.0);
}

TEST(ExtendedChsh, InconsistentProductsMayExceedTwo) {
    // Each observable is a product, but a1's side-1 factor differs between b1
    // and b2: no shared representation, so the bound is not implied.
    const InfoChshFamily family{image({1}, {1}), image({-1}, {-1}), image({1}, {1}), image({1}, {-1})};
    const auto r = check_extended_chsh(family, InformationState::uniform(1), ChshCoefficients::standard());
    EXPECT_EQ(r.lhs, 4.0);
    EXPECT_FALSE(r.satisfied);
    EXPECT_FALSE(*r.condition("factorizable_family"));
}

TEST(ExtendedChsh, SingletViolatesWithoutFactorizableForm) {
    const QuantumChshSettings s{spin(0), spin(90), spin(45), spin(135)};
    const auto r = check_extended_chsh(singlet_state(), s, kAlternate);
    EXPECT_NEAR(r.lhs, 2 * kSqrt2, 1e-12);
    EXPECT_FALSE(r.satisfied);
    EXPECT_FALSE(*r.condition("separable_state"));
}

TEST(ExtendedChsh, UnconstrainedCoefficientsReportFunctionalOnly) {
    const QuantumChshSettings s{spin(0), spin(90), spin(45), spin(135)};
    const auto r = check_extended_chsh(singlet_state(), s, ChshCoefficients::classify({{{1, 1}, {1, 1}}}));
    EXPECT_FALSE(r.bound_asserted);
    EXPECT_TRUE(std::isnan(r.rhs));
    EXPECT_FALSE(*r.condition("coefficient_constraint"));
}

TEST(ExtendedChsh, SeparableStateWithDecomposition) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto dec = testing::random_separable(rng);
        const auto rho = assemble_separable(dec);
        const QuantumChshSettings s{qubit_projective_pov(testing::random_qubit_setting(rng)),
                                    qubit_projective_pov(testing::random_qubit_setting(rng)),
                                    qubit_projective_pov(testing::random_qubit_setting(rng)),
                                    qubit_projective_pov(testing::random_qubit_setting(rng))};
        const auto r = check_extended_chsh(rho, s, testing::random_constrained_coefficients(rng), dec);
        EXPECT_TRUE(*r.condition("separable_state"));
        EXPECT_GE(r.margin, -1e-9);
    }
}

TEST(Bell, ZeroCorrelations) {
    const auto zero = make_product_observable(
        GeneralizedObservable::trivial(OutcomeSet::plus_minus_one(), {0.5, 0.5}, 1),
        GeneralizedObservable::trivial(OutcomeSet::plus_minus_one(), {0.5, 0.5}, 1));
    const auto r = check_bell({zero, zero, zero}, InformationState::uniform(1), Sign::plus);
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.rhs, 1.0);
    EXPECT_TRUE(r.satisfied);
}

TEST(Bell, ClassicalImageWithMatchingMarginal) {
    const std::vector<double> a{1, -1, 1, -1};
    const std::vector<double> b1{1, 1, -1, -1};
    const std::vector<double> b2{-1, 1, 1, 1};
    const InfoBellTriple t{image(a, b1), image(a, b2), image(b1, b2)};
    const auto r = check_bell(t, InformationState({}, {0.4, 0.3, 0.2, 0.1}), Sign::plus);
    EXPECT_TRUE(r.satisfied);
    EXPECT_TRUE(*r.condition("marginal_match"));
    EXPECT_TRUE(*r.condition("bell_correlation_restriction"));
    EXPECT_EQ(r.sign, "+");
}

TEST(Bell, SingletSignConvention) {
    const QuantumBellSettings s{spin(0), spin(60), spin(60), spin(120)};
    const auto plus = check_bell(singlet_state(), s, Sign::plus);
    EXPECT_NEAR(plus.lhs, 1.0, 1e-12);
    EXPECT_NEAR(plus.rhs, 1.5, 1e-12);
    EXPECT_TRUE(plus.satisfied);
    EXPECT_TRUE(*plus.condition("operator_match"));
    const auto minus = check_bell(singlet_state(), s, Sign::minus);
    EXPECT_NEAR(minus.rhs, 0.5, 1e-12);
    EXPECT_FALSE(minus.satisfied);
    EXPECT_FALSE(*minus.condition("operator_match"));

    const QuantumBellSettings t{spin(0), spin(45), spin(45), spin(90)};
    const auto r = check_bell(singlet_state(), t, Sign::plus);
    EXPECT_NEAR(r.lhs, std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(r.rhs, 1.0 + std::sqrt(0.5), 1e-12);
}

TEST(MarginalMatch, Oracles) {
    Rng rng(4);
    const auto plus = testing::random_marginal_matched_triple(rng, Sign::plus);
    EXPECT_TRUE(check_condition_marginal_match(plus.triple, plus.state, Sign::plus));
    const auto minus = testing::random_marginal_matched_triple(rng, Sign::minus);
    EXPECT_TRUE(check_condition_marginal_match(minus.triple, minus.state, Sign::minus));

    int mismatches = 0;
    for (int i = 0; i < 50; ++i) {
        const auto x = testing::random_marginal_matched_triple(rng, Sign::plus);
        const auto y = testing::random_marginal_matched_triple(rng, Sign::plus);
        if (x.state.size() != y.state.size() || x.triple.a_b1.factorization()->nu.size() !=
                                                     y.triple.b1_b2.factorization()->nu.size()) {
            continue;
        }
        // Same shape, independent b1 components: generically no match.
        InfoBellTriple mixed{x.triple.a_b1, x.triple.a_b2, y.triple.b1_b2};
        try {
            mismatches += check_condition_marginal_match(mixed, x.state, Sign::plus) ? 0 : 1;
        } catch (const HypothesisError&) {
            ++mismatches;
        }
    }
    EXPECT_GT(mismatches, 0);

    const OutcomeSet o = OutcomeSet::plus_minus_one();
    const JointObservable opaque(o, o, StochasticKernel::from_rows({{0.25, 0.25, 0.25, 0.25}}));
    EXPECT_THROW(check_condition_marginal_match({opaque, opaque, opaque}, InformationState::uniform(1), Sign::plus),
                 HypothesisError);
    const auto r = check_bell({opaque, opaque, opaque}, InformationState::uniform(1), Sign::plus);
    EXPECT_FALSE(*r.condition("marginal_match_checkable"));
}

TEST(CorrelationRestriction, Oracles) {
    EXPECT_TRUE(check_bell_correlation_restriction(1.0, Sign::plus));
    EXPECT_TRUE(check_bell_correlation_restriction(-1.0, Sign::minus));
    EXPECT_FALSE(check_bell_correlation_restriction(0.4, Sign::plus));
    EXPECT_FALSE(check_bell_correlation_restriction(-1.0, Sign::plus));
}

TEST(CorrelationRestriction, ImpliesMarginalMatch) {
    // E(b1,b1) = s forces f1(b1) = s f2(b1) = +-1 on the support.
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const Sign sign = rng.uniform() < 0.5 ? Sign::plus : Sign::minus;
        const std::size_t theta = 1 + rng.below(4);
        std::vector<double> f(theta);
        std::vector<double> g(theta);
        for (std::size_t t = 0; t < theta; ++t) {
            f[t] = rng.uniform() < 0.5 ? 1.0 : -1.0;
            g[t] = sign_value(sign) * f[t];
        }
        const auto a = testing::random_observable(OutcomeSet::plus_minus_one(), theta, rng);
        const auto b2 = testing::random_observable(OutcomeSet::plus_minus_one(), theta, rng);
        const InfoBellTriple t{make_product_observable(a, testing::binary_with_mean(f)), make_product_observable(a, b2),
                               make_product_observable(testing::binary_with_mean(g), b2)};
        const auto state = testing::random_state(theta, rng);
        const double e = bell_b1b1_correlation(t, state);
        ASSERT_TRUE(check_bell_correlation_restriction(e, sign));
        EXPECT_TRUE(check_condition_marginal_match(t, state, sign));
    }
}

TEST(CorrelationRestriction, MatchWithoutPerfectCorrelation) {
    const double f = std::sqrt(0.4);
    const std::vector<double> fb1{f};
    const auto b1 = testing::binary_with_mean(fb1);
    const GeneralizedObservable a(OutcomeSet::plus_minus_one(), StochasticKernel::from_rows({{0.8, 0.2}}));
    const GeneralizedObservable b2(OutcomeSet::plus_minus_one(), StochasticKernel::from_rows({{0.35, 0.65}}));
    const InfoBellTriple t{make_product_observable(a, b1), make_product_observable(a, b2),
                           make_product_observable(b1, b2)};
    const auto state = InformationState::uniform(1);
    EXPECT_TRUE(check_condition_marginal_match(t, state, Sign::plus));
    const double e = bell_b1b1_correlation(t, state);
    EXPECT_NEAR(e, 0.4, 1e-12);
    EXPECT_FALSE(check_bell_correlation_restriction(e, Sign::plus));
    EXPECT_TRUE(check_bell(t, state, Sign::plus).satisfied);
}

TEST(Bell, RandomMatchedTriplesSatisfied) {
    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        const Sign sign = i % 2 == 0 ? Sign::plus : Sign::minus;
        const auto sc = testing::random_marginal_matched_triple(rng, sign);
        const auto r = check_bell(sc.triple, sc.state, sign);
        EXPECT_GE(r.margin, -1e-9);
        EXPECT_TRUE(*r.condition("marginal_match"));
    }
}

std::map<SettingPair, JointPov> tensor_family(Rng& rng, bool symmetrized) {
    std::map<std::string, PovMeasure> alice;
    std::map<std::string, PovMeasure> bob;
    for (const char* a : {"a1", "a2", "a3"}) {
        alice.emplace(a, testing::random_qubit_pov(rng));
    }
    for (const char* b : {"b1", "b2"}) {
        bob.emplace(b, testing::random_qubit_pov(rng));
    }
    std::map<SettingPair, JointPov> family;
    for (const auto& [a, ma] : alice) {
        for (const auto& [b, mb] : bob) {
            family.emplace(SettingPair{a, b}, make_alice_bob_pov(ma, mb, symmetrized));
        }
    }
    return family;
}

TEST(LocalRealism, TensorFamiliesPass) {
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        EXPECT_TRUE(check_local_realism(tensor_family(rng, false)).passed);
        EXPECT_TRUE(check_local_realism(tensor_family(rng, true)).passed);
    }
}

TEST(LocalRealism, InfoFamiliesPassAndSignalingFails) {
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        const auto sc = testing::random_factorizable_chsh(rng);
        const std::map<SettingPair, JointObservable> family{{{"a1", "b1"}, sc.family.a1_b1},
                                                            {{"a1", "b2"}, sc.family.a1_b2},
                                                            {{"a2", "b1"}, sc.family.a2_b1},
                                                            {{"a2", "b2"}, sc.family.a2_b2}};
        const auto r = check_local_realism(family, {sc.state});
        EXPECT_TRUE(r.passed);
        EXPECT_TRUE(r.state_level_passed);
        EXPECT_TRUE(shares_single_nu(family));
    }
    const std::map<SettingPair, JointObservable> signaling{{{"a1", "b1"}, image({1}, {1})},
                                                           {{"a1", "b2"}, image({-1}, {-1})},
                                                           {{"a2", "b1"}, image({1}, {1})},
                                                           {{"a2", "b2"}, image({1}, {-1})}};
    const auto r = check_local_realism(signaling, {InformationState::uniform(1)});
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.side, 1);
    EXPECT_EQ(r.fixed_setting, "a1");
    EXPECT_EQ(r.reference_setting, "b1");
    EXPECT_EQ(r.offending_setting, "b2");
    EXPECT_NE(r.describe().find("a1"), std::string::npos);
    EXPECT_FALSE(r.to_report(1e-9).satisfied);
}

TEST(LocalRealism, PerturbedQuantumMarginalFails) {
    Rng rng(9);
    auto family = tensor_family(rng, false);
    const auto& original = family.at({"a2", "b2"});
    const auto m2 = *original.factors();
    const auto shifted = make_alice_bob_pov(spin(17), m2.second);
    family.erase({"a2", "b2"});
    family.emplace(SettingPair{"a2", "b2"}, shifted);
    const auto r = check_local_realism(family);
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.fixed_setting, "a2");
}

TEST(LocalRealism, SingletonGridIsInconclusive) {
    const std::map<SettingPair, JointObservable> family{{{"a1", "b1"}, image({1}, {1})},
                                                        {{"a2", "b1"}, image({1}, {1})}};
    EXPECT_THROW(check_local_realism(family), HypothesisError);
}

TEST(SharedNu, SettingDependentNuIsNotShared) {
    Rng rng(10);
    const auto x = testing::random_factorizable_chsh(rng, 3, 3);
    auto y = testing::random_factorizable_chsh(rng, 3, 3);
    const std::map<SettingPair, JointObservable> family{{{"a1", "b1"}, x.family.a1_b1},
                                                        {{"a1", "b2"}, x.family.a1_b2},
                                                        {{"a3", "b3"}, y.family.a1_b1},
                                                        {{"a3", "b4"}, y.family.a1_b2}};
    EXPECT_FALSE(shares_single_nu(family));
}

const SeparableDecomposition& reference_mixed() {
    static const SeparableDecomposition dec{
        {1.0}, {{DensityOperator::maximally_mixed(2), DensityOperator::maximally_mixed(2)}}, true};
    return dec;
}

TEST(QuantumBellAnalog, SeparableEqualToEtaHasUnitGamma) {
    Rng rng(11);
    const auto dec = testing::random_diagonal_separable(rng);
    const auto rho = assemble_separable(dec);
    const QuantumBellSettings s{spin(0), spin(50), spin(50), spin(130)};
    const auto r = check_quantum_bell_analog(rho, dec, s);
    const auto eta_tilde = assemble_diagonal_companion(dec);
    EXPECT_NEAR(r.rhs, 1.0 - correlation(eta_tilde, spin(50), spin(130), true), 1e-12);
    EXPECT_TRUE(r.satisfied);
}

TEST(QuantumBellAnalog, SingletAgainstMaximallyMixed) {
    const QuantumBellSettings s{spin(0), spin(60), spin(60), spin(120)};
    const auto r = check_quantum_bell_analog(singlet_state(), reference_mixed(), s);
    EXPECT_GT(r.margin, 0.0);
    EXPECT_TRUE(*r.condition("gamma_within_1_plus_2_trace_norm"));
}

TEST(QuantumBellAnalog, HypothesisFailures) {
    const QuantumBellSettings unmet{spin(0), spin(60), spin(30), spin(120)};
    EXPECT_THROW(check_quantum_bell_analog(singlet_state(), reference_mixed(), unmet), HypothesisError);
    Rng rng(12);
    const auto asym = testing::random_separable(rng);
    const auto rho = assemble_separable(asym);
    if (!is_swap_symmetric(rho.matrix())) {
        const QuantumBellSettings s{spin(0), spin(60), spin(60), spin(120)};
        EXPECT_THROW(check_quantum_bell_analog(rho, reference_mixed(), s), HypothesisError);
    }
}

TEST(QuantumBellAnalog, RandomSymmetricStates) {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        const auto rho = testing::random_symmetric_state(rng);
        auto dec = testing::random_separable(rng);
        dec.symmetrized = true;
        const auto b1 = testing::random_qubit_pov(rng);
        const QuantumBellSettings s{testing::random_qubit_pov(rng), b1, b1, testing::random_qubit_pov(rng)};
        EXPECT_GE(check_quantum_bell_analog(rho, dec, s).margin, -1e-9);
    }
}

TEST(SeparableBell, Oracles) {
    Rng rng(14);
    const auto tau = testing::random_qubit_state(rng);
    const SeparableDecomposition product{{1.0}, {{tau, tau}}, true};
    const auto rho = assemble_separable(product);
    const auto b = spin(35);
    const double expected = std::pow(trace_of_product(tau.matrix(), correlation_operator(b)).real(), 2);
    EXPECT_NEAR(correlation(rho, b, b), expected, 1e-12);
    const QuantumBellSettings s{spin(0), b, b, spin(100)};
    const auto reports = check_separable_bell(rho, product, s);
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_TRUE(reports[0].satisfied);
    EXPECT_TRUE(reports[1].satisfied);

    const auto mixed = check_separable_bell(DensityOperator::maximally_mixed(4), reference_mixed(), s);
    EXPECT_NEAR(mixed[0].lhs, 0.0, 1e-15);
    EXPECT_NEAR(mixed[0].rhs, 1.0, 1e-15);

    EXPECT_THROW(check_separable_bell(singlet_state(), reference_mixed(), s), HypothesisError);
}

TEST(SeparableBell, RandomDiagonalStates) {
    Rng rng(15);
    for (int i = 0; i < 200; ++i) {
        const auto dec = testing::random_diagonal_separable(rng);
        const auto b1 = qubit_projective_pov(testing::random_qubit_setting(rng));
        const QuantumBellSettings s{qubit_projective_pov(testing::random_qubit_setting(rng)), b1, b1,
                                    qubit_projective_pov(testing::random_qubit_setting(rng))};
        for (const auto& r : check_separable_bell(assemble_separable(dec), dec, s)) {
            EXPECT_GE(r.margin, -1e-9);
        }
    }
}

TEST(PairDifferenceBound, Oracles) {
    const auto zero = lemma1_bound(0.3, -0.7, 0, 0, 0.2, 1, 1);
    EXPECT_EQ(zero.lhs, 0.0);
    EXPECT_EQ(zero.rhs, 1.0);
    EXPECT_THROW(lemma1_bound(0, 0, 1.5, 0, 0, 1, 1), DomainError);

    // f1(a) = f2(b1) = -f2(b2) = +-1: equality.
    const std::vector<double> f{1, -1, 1};
    const std::vector<double> g{-1, 1, -1};
    const auto state = InformationState({}, {0.2, 0.3, 0.5});
    const double e1 = expectation_values(image(f, f), state).e12;
    const double e2 = expectation_values(image(f, g), state).e12;
    const auto o = OutcomeSet::plus_minus_one();
    const double et = tilde_correlation(GeneralizedObservable::deterministic(o, f),
                                        GeneralizedObservable::deterministic(o, g), state);
    const auto r = lemma1_bound(e1, e2, 1, -1, et, 1, 1);
    EXPECT_NEAR(r.lhs, 2.0, 1e-15);
    EXPECT_NEAR(r.margin, 0.0, 1e-15);
}

TEST(PairDifferenceBound, RandomProductObservables) {
    Rng rng(16);
    for (int i = 0; i < 500; ++i) {
        const std::size_t theta = 3;
        const auto a = testing::random_observable(testing::random_outcome_set(rng), theta, rng);
        const auto o2 = testing::random_outcome_set(rng);
        const auto b1 = testing::random_observable(o2, theta, rng);
        const auto b2 = testing::random_observable(o2, theta, rng);
        const auto state = testing::random_state(theta, rng);
        const double e1 = expectation_values(make_product_observable(a, b1), state).e12;
        const double e2 = expectation_values(make_product_observable(a, b2), state).e12;
        const double g1 = 2 * rng.uniform() - 1;
        const double g2 = 2 * rng.uniform() - 1;
        EXPECT_GE(lemma1_bound(e1, e2, g1, g2, tilde_correlation(b1, b2, state), 1, 1).margin, -1e-9);
    }
}

}  // namespace
}  // namespace locreal
