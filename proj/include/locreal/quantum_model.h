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

#ifndef LOCREAL_QUANTUM_MODEL_H
#define LOCREAL_QUANTUM_MODEL_H

#include <cstddef>
#include <optional>
#include <vector>

#include "locreal/info_model.h"
#include "locreal/linalg.h"

namespace locreal {

/// Hermitian, positive semidefinite, unit trace.
class DensityOperator {
   public:
    /// Throws DomainError when any of the three invariants fails.
    explicit DensityOperator(ComplexMatrix matrix);
    static DensityOperator maximally_mixed(std::size_t dim);
    static DensityOperator pure(std::span<const Complex> psi);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

   private:
    ComplexMatrix matrix_;
};

/// (|01> - |10>)/sqrt(2) projector on C^2 (x) C^2.
DensityOperator singlet_state();
/// p * singlet + (1 - p) * I/4, p in [0, 1].
DensityOperator werner_state(double p);

/// Positive operator-valued measure over a finite outcome set: one PSD
/// element per outcome, summing to the identity within 1e-8.
class PovMeasure {
   public:
    PovMeasure(OutcomeSet outcomes, std::vector<ComplexMatrix> elements);

    std::size_t dim() const { return elements_.front().rows(); }
    const OutcomeSet& outcomes() const { return outcomes_; }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }

   private:
    OutcomeSet outcomes_;
    std::vector<ComplexMatrix> elements_;
};

enum class JointPovForm { tensor, symmetrized, opaque };

/// POV measure on H1 (x) H2 with outcomes Lambda1 x Lambda2, elements ordered
/// (i1, i2) -> i1 * |Lambda2| + i2.
class JointPov {
   public:
    /// Opaque joint POV; dims are the factor dimensions.
    JointPov(std::size_t dim1, std::size_t dim2, OutcomeSet outcomes1, OutcomeSet outcomes2,
             std::vector<ComplexMatrix> elements);

    std::size_t dim1() const { return dim1_; }
    std::size_t dim2() const { return dim2_; }
    const OutcomeSet& outcomes1() const { return outcomes1_; }
    const OutcomeSet& outcomes2() const { return outcomes2_; }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }
    const ComplexMatrix& element(std::size_t i1, std::size_t i2) const {
        return elements_[i1 * outcomes2_.size() + i2];
    }
    JointPovForm form() const { return form_; }
    /// The local POVs for tensor and symmetrized forms.
    const std::optional<std::pair<PovMeasure, PovMeasure>>& factors() const { return factors_; }

   private:
    friend JointPov make_alice_bob_pov(const PovMeasure&, const PovMeasure&, bool);

    std::size_t dim1_ = 0;
    std::size_t dim2_ = 0;
    OutcomeSet outcomes1_;
    OutcomeSet outcomes2_;
    std::vector<ComplexMatrix> elements_;
    JointPovForm form_ = JointPovForm::opaque;
    std::optional<std::pair<PovMeasure, PovMeasure>> factors_;
};

/// tr[rho M(outcome)].
double quantum_outcome_probability(const DensityOperator& rho, const PovMeasure& m, std::size_t outcome);
double quantum_outcome_probability(const DensityOperator& rho, const JointPov& m, std::size_t i1, std::size_t i2);
/// Full distribution; throws InvariantError when it does not sum to one within 1e-9.
std::vector<double> quantum_outcome_distribution(const DensityOperator& rho, const PovMeasure& m);
std::vector<double> quantum_outcome_distribution(const DensityOperator& rho, const JointPov& m);

/// M1(l1) (x) M2(l2), or its swap-symmetrized form (requires equal dims).
JointPov make_alice_bob_pov(const PovMeasure& m1, const PovMeasure& m2, bool symmetrized = false);

/// Partial sum over the other side. Tensor forms have the identity factor
/// stripped (returns M1 or M2); symmetrized and opaque forms return the
/// (d1*d2)-dimensional marginal elements.
PovMeasure marginal_pov(const JointPov& joint, Side side);

/// A = sum_lambda lambda M(lambda).
ComplexMatrix correlation_operator(const PovMeasure& m);

/// tr[rho (A1 (x) A2)]. With `symmetrized` the value is summed over the
/// elements of the symmetrized joint POV instead (requires equal dims).
double correlation(const DensityOperator& rho, const PovMeasure& m1, const PovMeasure& m2, bool symmetrized = false);

/// sum_lambda1,lambda2 lambda1 lambda2 tr[rho M(lambda1, lambda2)].
double correlation(const DensityOperator& rho, const JointPov& joint);

/// S rho S = rho within `tol`. Requires a square dimension.
bool is_swap_symmetric(const ComplexMatrix& rho, double tol = 1e-9);

/// Weighted pairs (tau_j, tau~_j) of density operators on the same space.
struct SeparableDecomposition {
    std::vector<double> weights;
    std::vector<std::pair<DensityOperator, DensityOperator>> pairs;
    bool symmetrized = true;

    static constexpr std::size_t kMaxTerms = 1024;

    /// Throws DomainError for non-positive weights, weights not summing to
    /// one, mismatched dimensions or more than kMaxTerms pairs.
    void validate() const;
    std::size_t dim() const { return pairs.front().first.dim(); }
    /// True when tau~_j = tau_j for every j within 1e-12.
    bool is_diagonal_form() const;
};

/// sum_j g_j (tau_j (x) tau~_j + tau~_j (x) tau_j) / 2, or sum_j g_j tau_j (x) tau~_j
/// when not symmetrized.
DensityOperator assemble_separable(const SeparableDecomposition& dec);

/// sum_j g_j (tau_j (x) tau_j + tau~_j (x) tau~_j) / 2.
DensityOperator assemble_diagonal_companion(const SeparableDecomposition& dec);

struct RepresentationResidual {
    ComplexMatrix sigma;
    double sigma_trace_norm = 0;
    /// 1 + ||sigma||_1 * ||A2(b1) - A2(b2)||.
    double gamma = 1;
    DensityOperator eta_tilde;
};

/// Residual of rho = eta(tau, tau~) + sigma with the bound constant for the
/// settings b1, b2 (side-2 POVs).
RepresentationResidual representation_residual(const DensityOperator& rho, const SeparableDecomposition& dec,
                                               const PovMeasure& m_b1, const PovMeasure& m_b2);

}  // namespace locreal

#endif
