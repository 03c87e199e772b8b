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
#include "locreal/quantum_model.h"
#include "locreal/violation_search.h"

namespace locreal {
namespace {

using testing::random_qubit_pov;
using testing::random_qubit_state;
using testing::random_symmetric_state;

PovMeasure computational() {
    const std::vector<double> p0{1, 0};
    const std::vector<double> p1{0, 1};
    return PovMeasure(OutcomeSet::plus_minus_one(), {ComplexMatrix::diagonal(p0), ComplexMatrix::diagonal(p1)});
}

PovMeasure spin(double degrees) { return qubit_projective_pov(QubitSetting::in_xz_plane(degrees)); }

TEST(DensityOperator, Validation) {
    EXPECT_THROW(DensityOperator(ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}), DomainError);
    EXPECT_THROW(DensityOperator(ComplexMatrix{{1.5, 0}, {0, -0.5}}), DomainError);
    EXPECT_THROW(DensityOperator(ComplexMatrix{{0.6, 0}, {0, 0.6}}), DomainError);
    EXPECT_NO_THROW(DensityOperator::maximally_mixed(3));
    const std::vector<Complex> psi{1, Complex(0, 1)};
    EXPECT_NEAR(DensityOperator::pure(psi).matrix()(0, 1).imag(), -0.5, 1e-15);
}

TEST(PovMeasure, Validation) {
    const std::vector<double> half{0.5, 0.5};
    EXPECT_THROW(PovMeasure(OutcomeSet::plus_minus_one(), {ComplexMatrix::identity(2), ComplexMatrix::diagonal(half)}),
                 DomainError);
    EXPECT_THROW(PovMeasure(OutcomeSet::plus_minus_one(), {pauli_z() + ComplexMatrix::identity(2), pauli_z() * Complex(-1)}),
                 DomainError);
}

TEST(OutcomeProbability, Oracles) {
    const auto mixed = DensityOperator::maximally_mixed(2);
    EXPECT_NEAR(quantum_outcome_probability(mixed, computational(), 0), 0.5, 1e-15);
    const std::vector<Complex> zero{1, 0};
    const auto pure = DensityOperator::pure(zero);
    EXPECT_NEAR(quantum_outcome_probability(pure, computational(), 0), 1.0, 1e-15);
    EXPECT_NEAR(quantum_outcome_probability(pure, computational(), 1), 0.0, 1e-15);
    const auto zz = make_alice_bob_pov(computational(), computational());
    const auto dist = quantum_outcome_distribution(singlet_state(), zz);
    const std::vector<double> expected{0, 0.5, 0.5, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(dist[i], expected[i], 1e-12);
    }
    EXPECT_THROW(quantum_outcome_probability(singlet_state(), computational(), 0), DimensionError);
}

TEST(OutcomeProbability, ConvexLinearity) {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
        const DensityOperator r1(random_density_matrix(4, rng));
        const DensityOperator r2(random_density_matrix(4, rng));
        const double p = rng.uniform();
        const DensityOperator mix(r1.matrix() * Complex(p) + r2.matrix() * Complex(1 - p));
        const auto joint = make_alice_bob_pov(random_qubit_pov(rng), random_qubit_pov(rng));
        const auto d = quantum_outcome_distribution(mix, joint);
        const auto d1 = quantum_outcome_distribution(r1, joint);
        const auto d2 = quantum_outcome_distribution(r2, joint);
        for (std::size_t k = 0; k < d.size(); ++k) {
            EXPECT_NEAR(d[k], p * d1[k] + (1 - p) * d2[k], 1e-10);
        }
    }
}

TEST(AliceBobPov, TensorAndSymmetrized) {
    const auto zz = make_alice_bob_pov(computational(), computational());
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            std::vector<double> diag(4, 0.0);
            diag[2 * i + j] = 1.0;
            EXPECT_LT(max_abs_diff(zz.element(i, j), ComplexMatrix::diagonal(diag)), 1e-15);
        }
    }
    const auto m1 = spin(0);
    const auto m2 = spin(70);
    const auto sym = make_alice_bob_pov(m1, m2, true);
    EXPECT_EQ(sym.form(), JointPovForm::symmetrized);
    ComplexMatrix total(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const auto& e = sym.element(i, j);
            const auto expected = (tensor_product(m1.elements()[i], m2.elements()[j]) +
                                   tensor_product(m2.elements()[j], m1.elements()[i])) *
                                  Complex(0.5);
            EXPECT_LT(max_abs_diff(e, expected), 1e-12);
            total += e;
        }
    }
    EXPECT_LT(max_abs_diff(total, ComplexMatrix::identity(4)), 1e-12);
    const PovMeasure qutrit(OutcomeSet::plus_minus_one(),
                            {ComplexMatrix::identity(3), ComplexMatrix(3, 3)});
    EXPECT_THROW(make_alice_bob_pov(m1, qutrit, true), DimensionError);
}

TEST(MarginalPov, Forms) {
    Rng rng(2);
    const auto m1 = random_qubit_pov(rng);
    const auto m2 = random_qubit_pov(rng);
    const auto tensor = make_alice_bob_pov(m1, m2);
    const auto first = marginal_pov(tensor, Side::first);
    const auto second = marginal_pov(tensor, Side::second);
    for (std::size_t i = 0; i < m1.elements().size(); ++i) {
        EXPECT_LT(max_abs_diff(first.elements()[i], m1.elements()[i]), 1e-12);
    }
    for (std::size_t j = 0; j < m2.elements().size(); ++j) {
        EXPECT_LT(max_abs_diff(second.elements()[j], m2.elements()[j]), 1e-12);
    }

    const auto sym = make_alice_bob_pov(m1, m2, true);
    const auto sym_first = marginal_pov(sym, Side::first);
    const auto id = ComplexMatrix::identity(2);
    for (std::size_t i = 0; i < m1.elements().size(); ++i) {
        const auto expected =
            (tensor_product(m1.elements()[i], id) + tensor_product(id, m1.elements()[i])) * Complex(0.5);
        EXPECT_LT(max_abs_diff(sym_first.elements()[i], expected), 1e-12);
    }

    const JointPov opaque(2, 2, tensor.outcomes1(), tensor.outcomes2(), tensor.elements());
    const auto op_first = marginal_pov(opaque, Side::first);
    for (std::size_t i = 0; i < m1.elements().size(); ++i) {
        EXPECT_LT(max_abs_diff(op_first.elements()[i], tensor_product(m1.elements()[i], id)), 1e-12);
    }
}

TEST(MarginalPov, TensorMarginalsIgnoreOtherSetting) {
    Rng rng(3);
    const auto m1 = random_qubit_pov(rng);
    const auto first_a = marginal_pov(make_alice_bob_pov(m1, random_qubit_pov(rng)), Side::first);
    const auto first_b = marginal_pov(make_alice_bob_pov(m1, random_qubit_pov(rng)), Side::first);
    for (std::size_t i = 0; i < m1.elements().size(); ++i) {
        EXPECT_LT(max_abs_diff(first_a.elements()[i], first_b.elements()[i]), 1e-12);
    }
}

TEST(CorrelationOperator, Oracles) {
    EXPECT_LT(max_abs_diff(correlation_operator(computational()), pauli_z()), 1e-15);
    const std::vector<double> half{0.5, 0.5};
    const PovMeasure coin(OutcomeSet::plus_minus_one(), {ComplexMatrix::diagonal(half), ComplexMatrix::diagonal(half)});
    EXPECT_LT(correlation_operator(coin).max_abs(), 1e-15);
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        const auto s = testing::random_qubit_setting(rng, false);
        const ComplexMatrix n_sigma = pauli_x() * Complex(s.bloch[0]) + pauli_y() * Complex(s.bloch[1]) +
                                      pauli_z() * Complex(s.bloch[2]);
        const auto a = correlation_operator(qubit_projective_pov(s));
        EXPECT_LT(max_abs_diff(a, n_sigma * Complex(s.visibility)), 1e-12);
        EXPECT_LE(operator_norm(a), 1.0 + 1e-9);
    }
}

TEST(Correlation, Oracles) {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto tau = random_qubit_state(rng);
        const auto tau_tilde = random_qubit_state(rng);
        const DensityOperator product(tensor_product(tau.matrix(), tau_tilde.matrix()));
        const auto m1 = random_qubit_pov(rng);
        const auto m2 = random_qubit_pov(rng);
        const double expected = trace_of_product(tau.matrix(), correlation_operator(m1)).real() *
                                trace_of_product(tau_tilde.matrix(), correlation_operator(m2)).real();
        EXPECT_NEAR(correlation(product, m1, m2), expected, 1e-12);
    }
    for (double a : {0.0, 30.0, 90.0, 200.0}) {
        for (double b : {0.0, 45.0, 135.0, 300.0}) {
            EXPECT_NEAR(correlation(singlet_state(), spin(a), spin(b)), -std::cos((a - b) * std::numbers::pi / 180.0),
                        1e-12);
        }
    }
    EXPECT_NEAR(correlation(DensityOperator::maximally_mixed(4), spin(10), spin(80)), 0.0, 1e-15);
    EXPECT_THROW(correlation(DensityOperator::maximally_mixed(3), spin(0), spin(0)), DimensionError);
}

TEST(Correlation, JointPovRouteAgreesWithOperators) {
    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
        const DensityOperator rho(random_density_matrix(4, rng));
        const auto m1 = random_qubit_pov(rng);
        const auto m2 = random_qubit_pov(rng);
        EXPECT_NEAR(correlation(rho, make_alice_bob_pov(m1, m2)), correlation(rho, m1, m2), 1e-12);
    }
}

TEST(Correlation, SymmetrizedEqualsPlainForSymmetricStates) {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const auto rho = random_symmetric_state(rng);
        ASSERT_TRUE(is_swap_symmetric(rho.matrix()));
        const auto m1 = random_qubit_pov(rng);
        const auto m2 = random_qubit_pov(rng);
        EXPECT_NEAR(correlation(rho, m1, m2, true), correlation(rho, m1, m2, false), 1e-10);
    }
}

TEST(AssembleSeparable, Oracles) {
    Rng rng(8);
    const auto tau = random_qubit_state(rng);
    SeparableDecomposition single{{1.0}, {{tau, tau}}, true};
    EXPECT_LT(max_abs_diff(assemble_separable(single).matrix(), tensor_product(tau.matrix(), tau.matrix())), 1e-15);

    const std::vector<Complex> k0{1, 0};
    const std::vector<Complex> k1{0, 1};
    const auto p0 = DensityOperator::pure(k0);
    const auto p1 = DensityOperator::pure(k1);
    SeparableDecomposition two{{0.5, 0.5}, {{p0, p1}, {p1, p0}}, true};
    const std::vector<double> expected{0, 0.5, 0.5, 0};
    EXPECT_LT(max_abs_diff(assemble_separable(two).matrix(), ComplexMatrix::diagonal(expected)), 1e-15);

    SeparableDecomposition basis{{0.25, 0.25, 0.25, 0.25}, {{p0, p0}, {p0, p1}, {p1, p0}, {p1, p1}}, false};
    EXPECT_LT(max_abs_diff(assemble_separable(basis).matrix(), ComplexMatrix::identity(4) * Complex(0.25)), 1e-15);

    SeparableDecomposition bad{{0.5, 0.6}, {{p0, p0}, {p1, p1}}, true};
    EXPECT_THROW(assemble_separable(bad), DomainError);
}

TEST(AssembleSeparable, RandomDecompositionsAreStates) {
    Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        auto dec = testing::random_separable(rng);
        dec.symmetrized = rng.uniform() < 0.5;
        const auto eta = assemble_separable(dec);
        EXPECT_TRUE(is_psd(eta.matrix()));
        if (dec.symmetrized) {
            EXPECT_TRUE(is_swap_symmetric(eta.matrix()));
        }
    }
}

TEST(RepresentationResidual, Oracles) {
    Rng rng(10);
    auto dec = testing::random_diagonal_separable(rng);
    const auto eta = assemble_separable(dec);
    const auto exact = representation_residual(eta, dec, spin(0), spin(90));
    EXPECT_LT(exact.sigma_trace_norm, 1e-12);
    EXPECT_NEAR(exact.gamma, 1.0, 1e-12);

    const auto mixed = DensityOperator::maximally_mixed(2);
    SeparableDecomposition reference{{1.0}, {{mixed, mixed}}, true};
    const auto singlet = representation_residual(singlet_state(), reference, spin(0), spin(90));
    EXPECT_NEAR(singlet.sigma_trace_norm, 1.5, 1e-12);
    EXPECT_NEAR(singlet.gamma, 1.0 + 1.5 * std::sqrt(2.0), 1e-12);
    EXPECT_LE(singlet.gamma, 1.0 + 2.0 * singlet.sigma_trace_norm + 1e-12);
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const auto r = representation_residual(werner_state(p), reference, spin(0), spin(60));
        EXPECT_NEAR(r.sigma_trace_norm, 1.5 * p, 1e-9);
    }
}

TEST(RepresentationResidual, EtaTildeIsDiagonalCompanion) {
    Rng rng(11);
    auto dec = testing::random_separable(rng);
    dec.symmetrized = true;
    const auto r = representation_residual(assemble_separable(dec), dec, spin(0), spin(45));
    ComplexMatrix expected(4, 4);
    for (std::size_t j = 0; j < dec.weights.size(); ++j) {
        const auto& [tau, tau_tilde] = dec.pairs[j];
        expected += (tensor_product(tau.matrix(), tau.matrix()) + tensor_product(tau_tilde.matrix(), tau_tilde.matrix())) *
                    Complex(0.5 * dec.weights[j]);
    }
    EXPECT_LT(max_abs_diff(r.eta_tilde.matrix(), expected), 1e-12);
}

}  // namespace
}  // namespace locreal
