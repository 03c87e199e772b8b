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

#include "locreal/report.h"

#include <limits>

#include "locreal/errors.h"

namespace locreal {

Sign parse_sign(const std::string& text) {
    if (text == "+" || text == "plus") {
        return Sign::plus;
    }
    if (text == "-" || text == "minus") {
        return Sign::minus;
    }
    throw DomainError("sign must be \"+\" or \"-\", got \"" + text + "\"");
}

InequalityReport InequalityReport::make(std::string name, double lhs, double rhs, double tol) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.satisfied = r.margin >= -tol;
    r.tol = tol;
    return r;
}

InequalityReport InequalityReport::functional_only(std::string name, double lhs, double tol) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = std::numeric_limits<double>::quiet_NaN();
    r.margin = std::numeric_limits<double>::quiet_NaN();
    r.satisfied = true;
    r.bound_asserted = false;
    r.tol = tol;
    return r;
}

const bool* InequalityReport::condition(const std::string& condition) const {
    for (const auto& [name, held] : conditions_checked) {
        if (name == condition) {
            return &held;
        }
    }
    return nullptr;
}

}  // namespace locreal
