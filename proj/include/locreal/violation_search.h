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

#ifndef LOCREAL_VIOLATION_SEARCH_H
#define LOCREAL_VIOLATION_SEARCH_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "locreal/inequalities.h"
#include "locreal/quantum_model.h"

namespace locreal {

/// Two-outcome qubit measurement along a unit Bloch direction, mixed with
/// white noise: M(+-1) = (I +- v n.sigma) / 2.
struct QubitSetting {
    std::array<double, 3> bloch{0, 0, 1};
    double visibility = 1.0;

    /// Throws DomainError unless ||bloch|| = 1 within 1e-12 and v in [0, 1].
    QubitSetting(std::array<double, 3> bloch, double visibility = 1.0);
    /// Direction with polar angle theta and azimuth phi (radians).
    static QubitSetting from_angles(double theta, double phi, double visibility = 1.0);
    /// Direction in the x-z plane at `degrees` from z towards x.
    static QubitSetting in_xz_plane(double degrees, double visibility = 1.0);
};

/// Values {+1, -1}; projective when v = 1.
PovMeasure qubit_projective_pov(const QubitSetting& setting);

enum class BoundMethod { enumeration, spectral, seesaw };
const char* bound_method_name(BoundMethod m);

struct BoundResult {
    double value = 0;
    BoundMethod method = BoundMethod::enumeration;
    /// Human-readable argmax.
    std::string witness;
    /// enumeration: (alpha1, alpha2, beta1, beta2) in {+-1}.
    std::array<int, 4> strategy{};
    /// spectral: eigenvector attaining the value.
    std::vector<Complex> state;
    /// seesaw: (a1, a2, b1, b2).
    std::vector<QubitSetting> settings;
    /// seesaw: value after the grid stage and after each ascent round.
    std::vector<double> history;
};

/// max over the 16 deterministic strategies of |sum g_km alpha_k beta_m|.
BoundResult classical_lhv_bound(const ChshCoefficients& coeffs);

/// Largest |eigenvalue| of sum g_km A1(a_k) (x) A2(b_m): the maximum of the
/// CHSH functional over all states for these settings.
BoundResult quantum_max_value(const ChshCoefficients& coeffs, const QuantumChshSettings& settings);

struct SearchBudget {
    int polar_steps = 12;
    int azimuth_steps = 12;
    int max_rounds = 200;
    double convergence = 1e-10;
    /// Seeded random restarts in addition to the best grid point.
    int random_starts = 4;
    /// Worker threads for the grid stage; results do not depend on it.
    unsigned jobs = 1;
};

/// Maximizes |CHSH| over projective qubit settings for a fixed two-qubit
/// state: grid over Alice's pair with Bob in closed form, then coordinate
/// ascent where each setting is set to the normalized direction of its
/// effective Bloch vector. Throws DimensionError unless rho is 4x4.
BoundResult search_settings(const DensityOperator& rho, const ChshCoefficients& coeffs,
                            const SearchBudget& budget = {}, std::uint64_t seed = 0);

/// |CHSH| for explicit qubit settings (a1, a2, b1, b2), evaluated through the
/// POV and trace route.
double evaluate_settings(const DensityOperator& rho, const ChshCoefficients& coeffs,
                         const std::vector<QubitSetting>& settings);

}  // namespace locreal

#endif
