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

#ifndef LOCREAL_INEQUALITIES_H
#define LOCREAL_INEQUALITIES_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locreal/info_model.h"
#include "locreal/quantum_model.h"
#include "locreal/report.h"

namespace locreal {

/// Which product constraint makes the CHSH-form bound 2 valid:
/// row: g11 g12 = -g21 g22, column: g11 g21 = -g12 g22.
enum class ConstraintClass { row, column, none };
const char* constraint_class_name(ConstraintClass c);

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Coefficients g_km of sum_km g_km E(a_k, b_m), |g_km| <= 1.
class ChshCoefficients {
   public:
    /// Throws DomainError if |g_km| > 1 or the declared class does not hold
    /// within 1e-12.
    ChshCoefficients(Matrix2 gamma, ConstraintClass declared);
    /// Declares the first constraint that holds (row before column).
    static ChshCoefficients classify(Matrix2 gamma);
    /// ((1, 1), (1, -1)).
    static ChshCoefficients standard();

    const Matrix2& gamma() const { return gamma_; }
    ConstraintClass constraint_class() const { return class_; }

   private:
    Matrix2 gamma_;
    ConstraintClass class_;
};

/// sum_km g_km E_km. Throws DomainError when |E_km| > 1.
double chsh_functional(const Matrix2& correlations, const ChshCoefficients& coeffs);

/// Four joint observables indexed by (a_k, b_m).
struct InfoChshFamily {
    JointObservable a1_b1, a1_b2, a2_b1, a2_b2;
    const JointObservable& at(int k, int m) const;
};

/// Local POVs a1, a2 (side 1) and b1, b2 (side 2).
struct QuantumChshSettings {
    PovMeasure alice1, alice2, bob1, bob2;
    const PovMeasure& alice(int k) const { return k == 0 ? alice1 : alice2; }
    const PovMeasure& bob(int m) const { return m == 0 ? bob1 : bob2; }
};

/// True when all four observables carry a factorization sharing one nu and
/// one Omega, with the side-1 components depending only on a_k and the
/// side-2 components only on b_m, on a set covering the state's support.
bool is_factorizable_family(const InfoChshFamily& family, const InformationState& state);

/// |sum g_km E(a_k, b_m)| <= 2. Refuses to assert the bound (returns the
/// functional only) for ConstraintClass::none. Throws InvariantError if a
/// factorizable family violates it.
InequalityReport check_extended_chsh(const InfoChshFamily& family, const InformationState& state,
                                     const ChshCoefficients& coeffs, double tol = kDefaultTolerance);
/// Quantum Alice/Bob form. A decomposition reproducing rho establishes the
/// factorizable representation of the joint observables on rho.
InequalityReport check_extended_chsh(const DensityOperator& rho, const QuantumChshSettings& settings,
                                     const ChshCoefficients& coeffs,
                                     const std::optional<SeparableDecomposition>& decomposition = std::nullopt,
                                     double tol = kDefaultTolerance);

/// Joint observables for the setting pairs (a, b1), (a, b2), (b1, b2).
struct InfoBellTriple {
    JointObservable a_b1, a_b2, b1_b2;
};

/// Side-1 POVs for a and b1, side-2 POVs for b1 and b2.
struct QuantumBellSettings {
    PovMeasure alice_a, alice_b1, bob_b1, bob_b2;
};

/// f2(theta, omega, b1) = sign * f1(theta, omega, b1) wherever
/// pi(theta) nu(omega) > 0, within 1e-9. Here f2(., ., b1) comes from the
/// side-2 components of (a, b1) and f1(., ., b1) from the side-1 components of
/// (b1, b2). Throws HypothesisError when the triple is not a shared-nu
/// factorizable family on the state's support.
bool check_condition_marginal_match(const InfoBellTriple& triple, const InformationState& state, Sign sign);

/// sum pi nu f1(b1) f2(b1): the perfect-correlation value E(b1, b1) of the
/// family. Same applicability as check_condition_marginal_match.
double bell_b1b1_correlation(const InfoBellTriple& triple, const InformationState& state);

/// E(b1, b1) = +1 (plus) or -1 (minus) within 1e-9. Strictly stronger than
/// the marginal-match condition.
bool check_bell_correlation_restriction(double e_b1b1, Sign sign);

/// |E(a, b1) - E(a, b2)| <= 1 -+ E(b1, b2), with the sign of the marginal
/// match condition. Throws InvariantError if the condition holds and the
/// inequality fails.
InequalityReport check_bell(const InfoBellTriple& triple, const InformationState& state, Sign sign,
                            double tol = kDefaultTolerance);
InequalityReport check_bell(const DensityOperator& rho, const QuantumBellSettings& settings, Sign sign,
                            double tol = kDefaultTolerance);

using SettingPair = std::pair<std::string, std::string>;

struct LocalRealismReport {
    bool passed = true;
    /// Largest marginal deviation found across settings.
    double max_deviation = 0;
    /// Offending comparison when failed: side (1 or 2), the fixed setting and
    /// the two varying settings.
    int side = 0;
    std::string fixed_setting;
    std::string reference_setting;
    std::string offending_setting;
    /// Eq. (40) checked on the supplied states, distribution level.
    bool state_level_passed = true;

    std::string describe() const;
    InequalityReport to_report(double tol) const;
};

/// Each marginal of the setting-indexed family depends only on its own
/// setting. Kernel level for generalized observables, POV-element level for
/// quantum families. Throws HypothesisError for grids with fewer than two
/// settings on either side.
LocalRealismReport check_local_realism(const std::map<SettingPair, JointObservable>& family,
                                       const std::vector<InformationState>& states = {},
                                       double tol = kDefaultTolerance);
LocalRealismReport check_local_realism(const std::map<SettingPair, JointPov>& family,
                                       double tol = kDefaultTolerance);

/// True when every factorizable observable of the family uses one common nu
/// and components that depend only on their own setting label: the family
/// then admits a (formal) local hidden-variable model.
bool shares_single_nu(const std::map<SettingPair, JointObservable>& family);

/// |E(a,b1) - E(a,b2)| <= gamma - E_eta~(b1, b2) for a (tau, tau~)
/// representation of a swap-symmetric rho. Throws HypothesisError when rho is
/// not symmetric, the decomposition is not symmetrized, or A2(b1) != A1(b1).
InequalityReport check_quantum_bell_analog(const DensityOperator& rho, const SeparableDecomposition& dec,
                                           const QuantumBellSettings& settings, double tol = kDefaultTolerance);

/// Separable special case: the decomposition must reproduce rho. Returns the
/// inequality with E_eta~, followed by the perfect-correlation form with E_rho
/// when tau~_j = tau_j for all j.
std::vector<InequalityReport> check_separable_bell(const DensityOperator& rho, const SeparableDecomposition& dec,
                                                   const QuantumBellSettings& settings,
                                                   double tol = kDefaultTolerance);

/// |g1 E(a,b1) + g2 E(a,b2)| <= C1 C2 + g1 g2 (C1 / C2) E~.
InequalityReport lemma1_bound(double e_ab1, double e_ab2, double gamma1, double gamma2, double e_tilde, double c1,
                              double c2, double tol = kDefaultTolerance);

/// E~ = sum_theta pi f2(theta, b1) f2(theta, b2) for side-2 marginals.
double tilde_correlation(const GeneralizedObservable& p2_b1, const GeneralizedObservable& p2_b2,
                         const InformationState& state);

}  // namespace locreal

#endif
