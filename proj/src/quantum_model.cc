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

#include "locreal/quantum_model.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "locreal/errors.h"

namespace locreal {
namespace {

constexpr double kProbabilityTolerance = 1e-9;

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix h = m + m.adjoint();
    h *= 0.5;
    return h;
}

double clamp_probability(double p) {
    if (p < -kProbabilityTolerance || p > 1 + kProbabilityTolerance) {
        throw InvariantError("outcome probability " + std::to_string(p) + " outside [0, 1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

void require_dim(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw DimensionError(std::string(what) + ": dimension " + std::to_string(got) + " where " +
                             std::to_string(want) + " is required");
    }
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix matrix) {
    if (!matrix.is_square() || matrix.rows() == 0) {
        throw DimensionError("DensityOperator: matrix must be square and non-empty");
    }
    if (!is_hermitian(matrix, 1e-10)) {
        throw DomainError("DensityOperator: matrix is not Hermitian");
    }
    matrix_ = hermitian_part(matrix);
    if (!is_psd(matrix_)) {
        throw DomainError("DensityOperator: matrix is not positive semidefinite");
    }
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > 1e-9) {
        throw DomainError("DensityOperator: trace is " + std::to_string(tr));
    }
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    return DensityOperator(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

DensityOperator DensityOperator::pure(std::span<const Complex> psi) {
    double norm = 0;
    for (const auto& z : psi) {
        norm += std::norm(z);
    }
    if (norm <= 0) {
        throw DomainError("DensityOperator::pure: zero vector");
    }
    return DensityOperator(ComplexMatrix::outer(psi) * Complex(1.0 / norm));
}

DensityOperator singlet_state() {
    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<Complex> psi{0.0, r, -r, 0.0};
    return DensityOperator::pure(psi);
}

DensityOperator werner_state(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("werner_state: p must lie in [0, 1]");
    }
    return DensityOperator(singlet_state().matrix() * Complex(p) +
                           ComplexMatrix::identity(4) * Complex((1.0 - p) / 4.0));
}

PovMeasure::PovMeasure(OutcomeSet outcomes, std::vector<ComplexMatrix> elements)
    : outcomes_(std::move(outcomes)), elements_(std::move(elements)) {
    if (elements_.size() != outcomes_.size()) {
        throw DimensionError("PovMeasure: " + std::to_string(elements_.size()) + " elements for " +
                             std::to_string(outcomes_.size()) + " outcomes");
    }
    const std::size_t d = elements_.front().rows();
    ComplexMatrix total(d, d);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        auto& e = elements_[k];
        if (!e.is_square() || e.rows() != d || d == 0) {
            throw DimensionError("PovMeasure: element " + std::to_string(k) + " has the wrong shape");
        }
        if (!is_hermitian(e, 1e-10) || !is_psd(e)) {
            throw DomainError("PovMeasure: element " + std::to_string(k) + " is not positive semidefinite");
        }
        e = hermitian_part(e);
        total += e;
    }
    if (max_abs_diff(total, ComplexMatrix::identity(d)) > 1e-8) {
        throw DomainError("PovMeasure: elements do not sum to the identity (max deviation " +
                          std::to_string(max_abs_diff(total, ComplexMatrix::identity(d))) + ")");
    }
}

JointPov::JointPov(std::size_t dim1, std::size_t dim2, OutcomeSet outcomes1, OutcomeSet outcomes2,
                   std::vector<ComplexMatrix> elements)
    : dim1_(dim1), dim2_(dim2), outcomes1_(std::move(outcomes1)), outcomes2_(std::move(outcomes2)) {
    if (elements.size() != outcomes1_.size() * outcomes2_.size()) {
        throw DimensionError("JointPov: element count does not match |Lambda1| x |Lambda2|");
    }
    // Validation of the joint measure is the PovMeasure constructor's job.
    std::vector<double> flat_values(elements.size(), 0.0);
    PovMeasure as_pov(OutcomeSet(flat_values, 1.0), std::move(elements));
    require_dim(as_pov.dim(), dim1_ * dim2_, "JointPov");
    elements_ = as_pov.elements();
}

double quantum_outcome_probability(const DensityOperator& rho, const PovMeasure& m, std::size_t outcome) {
    require_dim(m.dim(), rho.dim(), "quantum_outcome_probability");
    if (outcome >= m.elements().size()) {
        throw DomainError("quantum_outcome_probability: outcome index out of range");
    }
    return clamp_probability(trace_of_product(rho.matrix(), m.elements()[outcome]).real());
}

double quantum_outcome_probability(const DensityOperator& rho, const JointPov& m, std::size_t i1, std::size_t i2) {
    require_dim(m.dim1() * m.dim2(), rho.dim(), "quantum_outcome_probability");
    if (i1 >= m.outcomes1().size() || i2 >= m.outcomes2().size()) {
        throw DomainError("quantum_outcome_probability: outcome index out of range");
    }
    return clamp_probability(trace_of_product(rho.matrix(), m.element(i1, i2)).real());
}

namespace {

std::vector<double> checked_distribution(std::vector<double> p) {
    double total = 0;
    for (double x : p) {
        total += x;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw InvariantError("outcome probabilities sum to " + std::to_string(total));
    }
    return p;
}

}  // namespace

std::vector<double> quantum_outcome_distribution(const DensityOperator& rho, const PovMeasure& m) {
    std::vector<double> p;
    for (std::size_t k = 0; k < m.elements().size(); ++k) {
        p.push_back(quantum_outcome_probability(rho, m, k));
    }
    return checked_distribution(std::move(p));
}

std::vector<double> quantum_outcome_distribution(const DensityOperator& rho, const JointPov& m) {
    std::vector<double> p;
    for (std::size_t i = 0; i < m.outcomes1().size(); ++i) {
        for (std::size_t j = 0; j < m.outcomes2().size(); ++j) {
            p.push_back(quantum_outcome_probability(rho, m, i, j));
        }
    }
    return checked_distribution(std::move(p));
}

JointPov make_alice_bob_pov(const PovMeasure& m1, const PovMeasure& m2, bool symmetrized) {
    if (symmetrized && m1.dim() != m2.dim()) {
        throw DimensionError("make_alice_bob_pov: symmetrized form requires equal dimensions");
    }
    std::vector<ComplexMatrix> elements;
    for (const auto& e1 : m1.elements()) {
        for (const auto& e2 : m2.elements()) {
            if (symmetrized) {
                ComplexMatrix sym = tensor_product(e1, e2) + tensor_product(e2, e1);
                sym *= 0.5;
                elements.push_back(std::move(sym));
            } else {
                elements.push_back(tensor_product(e1, e2));
            }
        }
    }
    JointPov joint(m1.dim(), m2.dim(), m1.outcomes(), m2.outcomes(), std::move(elements));
    joint.form_ = symmetrized ? JointPovForm::symmetrized : JointPovForm::tensor;
    joint.factors_.emplace(m1, m2);
    return joint;
}

PovMeasure marginal_pov(const JointPov& joint, Side side) {
    const std::size_t n1 = joint.outcomes1().size();
    const std::size_t n2 = joint.outcomes2().size();
    const std::size_t d = joint.dim1() * joint.dim2();
    std::vector<ComplexMatrix> sums;
    if (side == Side::first) {
        for (std::size_t i = 0; i < n1; ++i) {
            ComplexMatrix s(d, d);
            for (std::size_t j = 0; j < n2; ++j) {
                s += joint.element(i, j);
            }
            sums.push_back(std::move(s));
        }
    } else {
        for (std::size_t j = 0; j < n2; ++j) {
            ComplexMatrix s(d, d);
            for (std::size_t i = 0; i < n1; ++i) {
                s += joint.element(i, j);
            }
            sums.push_back(std::move(s));
        }
    }
    const OutcomeSet& outcomes = side == Side::first ? joint.outcomes1() : joint.outcomes2();
    if (joint.form() != JointPovForm::tensor) {
        return PovMeasure(outcomes, std::move(sums));
    }
    // M1(l1) (x) I: strip the identity factor by a normalized partial trace.
    std::vector<ComplexMatrix> stripped;
    for (const auto& s : sums) {
        if (side == Side::first) {
            stripped.push_back(partial_trace_second(s, joint.dim1(), joint.dim2()) *
                               Complex(1.0 / static_cast<double>(joint.dim2())));
        } else {
            stripped.push_back(partial_trace_first(s, joint.dim1(), joint.dim2()) *
                               Complex(1.0 / static_cast<double>(joint.dim1())));
        }
    }
    return PovMeasure(outcomes, std::move(stripped));
}

ComplexMatrix correlation_operator(const PovMeasure& m) {
    const std::size_t d = m.dim();
    ComplexMatrix a(d, d);
    for (std::size_t k = 0; k < m.elements().size(); ++k) {
        a += m.elements()[k] * Complex(m.outcomes().values()[k]);
    }
    if (operator_norm(a) > m.outcomes().bound() + 1e-9) {
        throw InvariantError("correlation_operator: operator norm exceeds the outcome bound");
    }
    return a;
}

double correlation(const DensityOperator& rho, const PovMeasure& m1, const PovMeasure& m2, bool symmetrized) {
    require_dim(m1.dim() * m2.dim(), rho.dim(), "correlation");
    if (symmetrized) {
        return correlation(rho, make_alice_bob_pov(m1, m2, true));
    }
    return trace_of_product(rho.matrix(), tensor_product(correlation_operator(m1), correlation_operator(m2))).real();
}

double correlation(const DensityOperator& rho, const JointPov& joint) {
    require_dim(joint.dim1() * joint.dim2(), rho.dim(), "correlation");
    double e = 0;
    for (std::size_t i = 0; i < joint.outcomes1().size(); ++i) {
        for (std::size_t j = 0; j < joint.outcomes2().size(); ++j) {
            e += joint.outcomes1().values()[i] * joint.outcomes2().values()[j] *
                 trace_of_product(rho.matrix(), joint.element(i, j)).real();
        }
    }
    return e;
}

bool is_swap_symmetric(const ComplexMatrix& rho, double tol) {
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(rho.rows()))));
    if (d * d != rho.rows()) {
        throw DimensionError("is_swap_symmetric: dimension is not a perfect square");
    }
    return max_abs_diff(swap_conjugate(rho, d), rho) <= tol;
}

void SeparableDecomposition::validate() const {
    if (pairs.empty() || pairs.size() != weights.size()) {
        throw DomainError("SeparableDecomposition: need one positive weight per pair");
    }
    if (pairs.size() > kMaxTerms) {
        throw DomainError("SeparableDecomposition: more than " + std::to_string(kMaxTerms) + " terms");
    }
    double total = 0;
    for (double g : weights) {
        if (!(g > 0) || !std::isfinite(g)) {
            throw DomainError("SeparableDecomposition: weights must be positive");
        }
        total += g;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw DomainError("SeparableDecomposition: weights sum to " + std::to_string(total));
    }
    for (const auto& [tau, tau_tilde] : pairs) {
        if (tau.dim() != dim() || tau_tilde.dim() != dim()) {
            throw DimensionError("SeparableDecomposition: pairs act on different dimensions");
        }
    }
}

bool SeparableDecomposition::is_diagonal_form() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const auto& p) {
        return max_abs_diff(p.first.matrix(), p.second.matrix()) <= 1e-12;
    });
}

DensityOperator assemble_separable(const SeparableDecomposition& dec) {
    dec.validate();
    const std::size_t d = dec.dim();
    ComplexMatrix eta(d * d, d * d);
    for (std::size_t j = 0; j < dec.pairs.size(); ++j) {
        const auto& [tau, tau_tilde] = dec.pairs[j];
        if (dec.symmetrized) {
            eta += (tensor_product(tau.matrix(), tau_tilde.matrix()) + tensor_product(tau_tilde.matrix(), tau.matrix())) *
                   Complex(0.5 * dec.weights[j]);
        } else {
            eta += tensor_product(tau.matrix(), tau_tilde.matrix()) * Complex(dec.weights[j]);
        }
    }
    return DensityOperator(std::move(eta));
}

DensityOperator assemble_diagonal_companion(const SeparableDecomposition& dec) {
    dec.validate();
    const std::size_t d = dec.dim();
    ComplexMatrix eta(d * d, d * d);
    for (std::size_t j = 0; j < dec.pairs.size(); ++j) {
        const auto& [tau, tau_tilde] = dec.pairs[j];
        eta += (tensor_product(tau.matrix(), tau.matrix()) + tensor_product(tau_tilde.matrix(), tau_tilde.matrix())) *
               Complex(0.5 * dec.weights[j]);
    }
    return DensityOperator(std::move(eta));
}

RepresentationResidual representation_residual(const DensityOperator& rho, const SeparableDecomposition& dec,
                                               const PovMeasure& m_b1, const PovMeasure& m_b2) {
    dec.validate();
    const std::size_t d = dec.dim();
    require_dim(rho.dim(), d * d, "representation_residual");
    require_dim(m_b1.dim(), d, "representation_residual");
    require_dim(m_b2.dim(), d, "representation_residual");

    const DensityOperator eta = assemble_separable(dec);
    ComplexMatrix sigma = rho.matrix() - eta.matrix();
    const double sigma_norm = trace_norm(sigma);
    const double spread = operator_norm(correlation_operator(m_b1) - correlation_operator(m_b2));
    const double gamma = 1.0 + sigma_norm * spread;
    if (m_b1.outcomes().bound() <= 1.0 && m_b2.outcomes().bound() <= 1.0 &&
        gamma > 1.0 + 2.0 * sigma_norm + 1e-9) {
        throw InvariantError("representation_residual: gamma exceeds 1 + 2 ||sigma||_1");
    }
    return RepresentationResidual{std::move(sigma), sigma_norm, gamma, assemble_diagonal_companion(dec)};
}

}  // namespace locreal
