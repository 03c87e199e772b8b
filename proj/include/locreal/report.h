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

#ifndef LOCREAL_REPORT_H
#define LOCREAL_REPORT_H

#include <string>
#include <utility>
#include <vector>

namespace locreal {

inline constexpr double kDefaultTolerance = 1e-9;

/// The +/- choice shared by a sufficient condition and the inequality it
/// implies: f2 = +f1 pairs with "1 - E", f2 = -f1 with "1 + E".
enum class Sign { plus, minus };

constexpr double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
constexpr const char* sign_symbol(Sign s) { return s == Sign::plus ? "+" : "-"; }
Sign parse_sign(const std::string& text);

/// Outcome of evaluating one inequality `lhs <= rhs`.
struct InequalityReport {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    double margin = 0;
    bool satisfied = true;
    /// False when the hypothesis for a bound is absent and only `lhs` is
    /// meaningful (rhs and margin are then NaN and `satisfied` is true).
    bool bound_asserted = true;
    std::vector<std::pair<std::string, bool>> conditions_checked;
    double tol = kDefaultTolerance;
    /// "+", "-" or empty.
    std::string sign;
    std::string detail;

    static InequalityReport make(std::string name, double lhs, double rhs, double tol);
    static InequalityReport functional_only(std::string name, double lhs, double tol);

    /// Value recorded for `condition`, or nullptr.
    const bool* condition(const std::string& condition) const;
};

}  // namespace locreal

#endif
