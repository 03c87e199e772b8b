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

#ifndef LOCREAL_SCENARIO_H_
#define LOCREAL_SCENARIO_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "locreal/errors.h"
#include "locreal/inequalities.h"
#include "locreal/info_model.h"
#include "locreal/quantum_model.h"
#include "locreal/violation_search.h"

namespace locreal {

/// Scenario input rejected; the message starts with the JSON path of the
/// offending field, or with the line number for syntax errors.
class ScenarioError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

enum class ScenarioKind { info, quantum };

struct InfoObservableEntry {
    std::string alice;
    std::string bob;
    JointObservable joint;
};

struct NamedState {
    std::string name;
    DensityOperator rho;
    std::optional<SeparableDecomposition> decomposition;
};

enum class CheckType { chsh, bell, bell_restriction, local_realism, quantum_bell_analog, separable_bell };
const char* check_type_name(CheckType t);

struct CheckSpec {
    CheckType type = CheckType::chsh;
    /// chsh: settings (a1, a2) and (b1, b2).
    std::array<std::string, 2> alice{"a1", "a2"};
    std::array<std::string, 2> bob{"b1", "b2"};
    ChshCoefficients coeffs = ChshCoefficients::standard();
    /// chsh on quantum states: use the state's decomposition when present.
    bool use_decomposition = true;
    /// Bell family, information model: the three joint observables.
    SettingPair a_b1;
    SettingPair a_b2;
    SettingPair b1_b2;
    /// Bell family, quantum model: side-1 POVs a and b1, side-2 POVs b1 and b2.
    std::string alice_a;
    std::string alice_b1;
    std::string bob_b1;
    std::string bob_b2;
    Sign sign = Sign::plus;
    /// local_realism on quantum families: symmetrized joint POVs.
    bool symmetrized = false;
    std::optional<double> tol;
};

struct SimulationSpec {
    std::uint64_t n = 100000;
    std::uint64_t seed = 0;
    /// Quantum: sample symmetrized joint POVs.
    bool symmetrized = false;
};

struct SearchSpec {
    ChshCoefficients coeffs = ChshCoefficients::standard();
    SearchBudget budget;
    std::uint64_t seed = 0;
};

struct Scenario {
    std::string name;
    std::string description;
    ScenarioKind kind = ScenarioKind::info;
    double tolerance = kDefaultTolerance;
    /// Information model.
    std::optional<InformationState> theta;
    std::vector<InfoObservableEntry> observables;
    /// Quantum model.
    std::vector<NamedState> states;
    std::map<std::string, PovMeasure> alice;
    std::map<std::string, PovMeasure> bob;

    std::vector<CheckSpec> checks;
    std::optional<SimulationSpec> simulation;
    std::optional<SearchSpec> search;

    /// Observables keyed by (alice, bob) label.
    std::map<SettingPair, JointObservable> observable_map() const;
    const JointObservable& observable(const SettingPair& key) const;
};

/// Throws ScenarioError naming the JSON path of the first invalid field.
Scenario parse_scenario(const nlohmann::json& document);
/// Syntax errors are reported with their line number.
Scenario parse_scenario_text(std::string_view text);
/// Throws ScenarioError when the file cannot be read.
Scenario load_scenario(const std::string& path);

/// Canonical form: matrices written out in full, shorthands expanded.
nlohmann::json to_json(const Scenario& scenario);

/// Largest absolute difference between the numeric payloads of two
/// scenarios; +inf when their structure differs.
double scenario_distance(const Scenario& a, const Scenario& b);

}  // namespace locreal

#endif
