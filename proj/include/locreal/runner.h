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

#ifndef LOCREAL_RUNNER_H_
#define LOCREAL_RUNNER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "locreal/report.h"
#include "locreal/scenario.h"

namespace locreal {

enum class Command { validate, check, search, simulate };
/// Throws ScenarioError for unknown names.
Command parse_command(const std::string& name);

struct RunOptions {
    /// Overrides the scenario tolerance.
    std::optional<double> tol;
    /// Overrides the simulation and search seeds.
    std::optional<std::uint64_t> seed;
    /// Worker threads; outputs do not depend on it.
    unsigned jobs = 1;
};

/// One output row: a report plus, for simulations, its statistics.
struct ReportRow {
    InequalityReport report;
    std::optional<double> se;
    std::optional<double> z_violation;
};

struct RunResult {
    nlohmann::json document;
    std::vector<ReportRow> rows;
};

/// Exceptions propagate unchanged: ValidationError, HypothesisError and
/// InvariantError map to exit statuses 1, 2 and 3.
RunResult run(Command command, const Scenario& scenario, const RunOptions& options = {});

nlohmann::json report_to_json(const InequalityReport& report);

/// Header name,lhs,rhs,margin,satisfied,conditions (plus se,z_violation for
/// simulations), one line per row.
std::string to_csv(const std::vector<ReportRow>& rows);

}  // namespace locreal

#endif
