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

#include "locreal/info_model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "locreal/errors.h"

namespace locreal {
namespace {

constexpr double kRowTolerance = 1e-9;

void require_theta(std::size_t observable_size, std::size_t state_size, const char* what) {
    if (observable_size != state_size) {
        throw DimensionError(std::string(what) + ": observable is defined on " + std::to_string(observable_size) +
                             " points but the state has " + std::to_string(state_size));
    }
}

std::vector<double> validated_probabilities(std::vector<double> p, const char* what) {
    if (p.empty()) {
        throw DomainError(std::string(what) + ": empty distribution");
    }
    double total = 0;
    for (double& x : p) {
        if (!std::isfinite(x) || x < -1e-12 || x > 1 + 1e-12) {
            throw DomainError(std::string(what) + ": probability " + std::to_string(x) + " outside [0, 1]");
        }
        x = std::clamp(x, 0.0, 1.0);
        total += x;
    }
    if (std::abs(total - 1.0) > kRowTolerance) {
        throw DomainError(std::string(what) + ": probabilities sum to " + std::to_string(total));
    }
    for (double& x : p) {
        x /= total;
    }
    return p;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

// Row theta of the product P1 x P2, flattened (i1, i2).
void product_row(const GeneralizedObservable& p1, const GeneralizedObservable& p2, std::size_t theta, double weight,
                 std::span<double> out) {
    const auto r1 = p1.kernel().row(theta);
    const auto r2 = p2.kernel().row(theta);
    for (std::size_t i = 0; i < r1.size(); ++i) {
        for (std::size_t j = 0; j < r2.size(); ++j) {
            out[i * r2.size() + j] += weight * r1[i] * r2[j];
        }
    }
}

std::vector<double> mixture_row(const Factorization& f, std::size_t theta, std::size_t width) {
    std::vector<double> row(width, 0.0);
    for (std::size_t w = 0; w < f.components.size(); ++w) {
        product_row(f.components[w].first, f.components[w].second, theta, f.nu[w], row);
    }
    return row;
}

void validate_factorization(const Factorization& f, const OutcomeSet& o1, const OutcomeSet& o2,
                            std::size_t theta_size) {
    if (f.components.empty()) {
        throw DomainError("factorization: no components");
    }
    if (f.components.size() != f.nu.size()) {
        throw DimensionError("factorization: " + std::to_string(f.components.size()) + " components but " +
                             std::to_string(f.nu.size()) + " weights");
    }
    validated_probabilities(f.nu, "factorization weights");
    for (const auto& [p1, p2] : f.components) {
        if (!(p1.outcomes() == o1) || !(p2.outcomes() == o2)) {
            throw DimensionError("factorization: component outcome sets differ");
        }
        if (p1.theta_size() != theta_size || p2.theta_size() != theta_size) {
            throw DimensionError("factorization: component defined on a different Theta");
        }
    }
    if (!std::is_sorted(f.support.begin(), f.support.end()) ||
        std::adjacent_find(f.support.begin(), f.support.end()) != f.support.end()) {
        throw DomainError("factorization: support indices must be strictly ascending");
    }
    if (!f.support.empty() && f.support.back() >= theta_size) {
        throw DomainError("factorization: support index out of range");
    }
}

}  // namespace

InformationState::InformationState(std::vector<std::string> labels, std::vector<double> pi)
    : labels_(std::move(labels)), pi_(validated_probabilities(std::move(pi), "InformationState")) {
    if (labels_.empty()) {
        for (std::size_t i = 0; i < pi_.size(); ++i) {
            labels_.push_back("t" + std::to_string(i));
        }
    }
    if (labels_.size() != pi_.size()) {
        throw DimensionError("InformationState: " + std::to_string(labels_.size()) + " labels but " +
                             std::to_string(pi_.size()) + " probabilities");
    }
    for (std::size_t i = 0; i < pi_.size(); ++i) {
        if (pi_[i] > 0) {
            support_.push_back(i);
        }
    }
}

InformationState InformationState::uniform(std::size_t n) {
    return InformationState({}, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

OutcomeSet::OutcomeSet(std::vector<double> values, double bound) : values_(std::move(values)), bound_(bound) {
    if (values_.empty()) {
        throw DomainError("OutcomeSet: no outcome values");
    }
    if (!(bound_ > 0) || !std::isfinite(bound_)) {
        throw DomainError("OutcomeSet: bound must be a positive real");
    }
    for (double v : values_) {
        if (!std::isfinite(v) || std::abs(v) > bound_) {
            throw DomainError("OutcomeSet: value " + std::to_string(v) + " exceeds bound " + std::to_string(bound_));
        }
    }
}

OutcomeSet OutcomeSet::plus_minus_one() { return OutcomeSet({1.0, -1.0}, 1.0); }

std::optional<std::size_t> OutcomeSet::index_of(double value) const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (std::abs(values_[i] - value) <= 1e-12) {
            return i;
        }
    }
    return std::nullopt;
}

StochasticKernel::StochasticKernel(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows_ == 0 || cols_ == 0 || data_.size() != rows_ * cols_) {
        throw DimensionError("StochasticKernel: " + std::to_string(data_.size()) + " entries for a " +
                             std::to_string(rows_) + "x" + std::to_string(cols_) + " kernel");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        std::vector<double> row(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
        row = validated_probabilities(std::move(row), ("StochasticKernel row " + std::to_string(r)).c_str());
        std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
    }
}

StochasticKernel StochasticKernel::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        throw DimensionError("StochasticKernel: no rows");
    }
    std::vector<double> data;
    for (const auto& row : rows) {
        if (row.size() != rows.front().size()) {
            throw DimensionError("StochasticKernel: ragged rows");
        }
        data.insert(data.end(), row.begin(), row.end());
    }
    return StochasticKernel(rows.size(), rows.front().size(), std::move(data));
}

std::vector<std::vector<double>> StochasticKernel::to_rows() const {
    std::vector<std::vector<double>> out;
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto row_view = row(r);
        out.emplace_back(row_view.begin(), row_view.end());
    }
    return out;
}

double max_abs_diff(const StochasticKernel& a, const StochasticKernel& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: kernel shapes differ");
    }
    double m = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
        }
    }
    return m;
}

GeneralizedObservable::GeneralizedObservable(OutcomeSet outcomes, StochasticKernel kernel)
    : outcomes_(std::move(outcomes)), kernel_(std::move(kernel)) {
    if (kernel_.cols() != outcomes_.size()) {
        throw DimensionError("GeneralizedObservable: kernel has " + std::to_string(kernel_.cols()) +
                             " columns for " + std::to_string(outcomes_.size()) + " outcomes");
    }
}

GeneralizedObservable GeneralizedObservable::trivial(OutcomeSet outcomes, std::vector<double> distribution,
                                                     std::size_t theta_size) {
    std::vector<double> data;
    for (std::size_t t = 0; t < theta_size; ++t) {
        data.insert(data.end(), distribution.begin(), distribution.end());
    }
    const std::size_t width = distribution.size();
    return GeneralizedObservable(std::move(outcomes), StochasticKernel(theta_size, width, std::move(data)));
}

GeneralizedObservable GeneralizedObservable::deterministic(OutcomeSet outcomes, std::span<const double> values) {
    std::vector<double> data(values.size() * outcomes.size(), 0.0);
    for (std::size_t t = 0; t < values.size(); ++t) {
        const auto k = outcomes.index_of(values[t]);
        if (!k) {
            throw DomainError("deterministic observable: value " + std::to_string(values[t]) +
                              " is not in the outcome set");
        }
        data[t * outcomes.size() + *k] = 1.0;
    }
    const std::size_t width = outcomes.size();
    return GeneralizedObservable(std::move(outcomes), StochasticKernel(values.size(), width, std::move(data)));
}

std::vector<double> GeneralizedObservable::mean_function() const {
    std::vector<double> f(theta_size(), 0.0);
    for (std::size_t t = 0; t < theta_size(); ++t) {
        for (std::size_t k = 0; k < outcomes_.size(); ++k) {
            f[t] += outcomes_.values()[k] * kernel_(t, k);
        }
    }
    return f;
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::image:
            return "image";
        case Provenance::product:
            return "product";
        case Provenance::factorizable:
            return "factorizable";
        case Provenance::opaque:
            return "opaque";
    }
    return "opaque";
}

bool Factorization::covers(std::span<const std::size_t> indices) const {
    return std::includes(support.begin(), support.end(), indices.begin(), indices.end());
}

JointObservable::JointObservable(OutcomeSet outcomes1, OutcomeSet outcomes2, StochasticKernel kernel)
    : outcomes1_(std::move(outcomes1)), outcomes2_(std::move(outcomes2)), kernel_(std::move(kernel)) {
    if (kernel_.cols() != outcomes1_.size() * outcomes2_.size()) {
        throw DimensionError("JointObservable: kernel has " + std::to_string(kernel_.cols()) + " columns for " +
                             std::to_string(outcomes1_.size()) + "x" + std::to_string(outcomes2_.size()) +
                             " outcomes");
    }
}

JointObservable::JointObservable(OutcomeSet outcomes1, OutcomeSet outcomes2, StochasticKernel kernel,
                                 Provenance provenance, Factorization factorization)
    : JointObservable(std::move(outcomes1), std::move(outcomes2), std::move(kernel)) {
    if (provenance == Provenance::opaque) {
        throw DomainError("JointObservable: opaque provenance cannot carry a factorization");
    }
    validate_factorization(factorization, outcomes1_, outcomes2_, kernel_.rows());
    for (std::size_t theta : factorization.support) {
        const auto expected = mixture_row(factorization, theta, kernel_.cols());
        const auto actual = kernel_.row(theta);
        for (std::size_t c = 0; c < expected.size(); ++c) {
            if (std::abs(expected[c] - actual[c]) > kRowTolerance) {
                throw DomainError("JointObservable: kernel row " + std::to_string(theta) +
                                  " differs from the declared factorization");
            }
        }
    }
    provenance_ = provenance;
    factorization_ = std::move(factorization);
}

JointObservable make_image_observable(std::span<const double> f1, std::span<const double> f2, OutcomeSet outcomes1,
                                      OutcomeSet outcomes2) {
    if (f1.size() != f2.size() || f1.empty()) {
        throw DimensionError("make_image_observable: f1 and f2 must be defined on the same non-empty Theta");
    }
    auto p1 = GeneralizedObservable::deterministic(outcomes1, f1);
    auto p2 = GeneralizedObservable::deterministic(outcomes2, f2);
    Factorization f{{{p1, p2}}, {1.0}, all_indices(f1.size())};
    const std::size_t width = outcomes1.size() * outcomes2.size();
    std::vector<double> data;
    for (std::size_t t = 0; t < f1.size(); ++t) {
        const auto row = mixture_row(f, t, width);
        data.insert(data.end(), row.begin(), row.end());
    }
    StochasticKernel kernel(f1.size(), width, std::move(data));
    return JointObservable(std::move(outcomes1), std::move(outcomes2), std::move(kernel), Provenance::image,
                           std::move(f));
}

JointObservable make_image_observable(const std::vector<std::string>& theta, const std::map<std::string, double>& f1,
                                      const std::map<std::string, double>& f2, OutcomeSet outcomes1,
                                      OutcomeSet outcomes2) {
    std::vector<double> v1;
    std::vector<double> v2;
    for (const auto& label : theta) {
        const auto i1 = f1.find(label);
        const auto i2 = f2.find(label);
        if (i1 == f1.end() || i2 == f2.end()) {
            throw DomainError("make_image_observable: no value assigned to point \"" + label + "\"");
        }
        v1.push_back(i1->second);
        v2.push_back(i2->second);
    }
    return make_image_observable(v1, v2, std::move(outcomes1), std::move(outcomes2));
}

JointObservable make_product_observable(const GeneralizedObservable& p1, const GeneralizedObservable& p2) {
    if (p1.theta_size() != p2.theta_size()) {
        throw DimensionError("make_product_observable: marginals are defined on different Theta");
    }
    auto joint = make_factorizable_observable({{p1, p2}}, {1.0});
    return JointObservable(joint.outcomes1(), joint.outcomes2(), joint.kernel(), Provenance::product,
                           *joint.factorization());
}

JointObservable make_factorizable_observable(std::vector<ObservablePair> components, std::vector<double> nu,
                                             std::optional<std::vector<std::size_t>> support,
                                             std::optional<StochasticKernel> off_support_rows) {
    if (components.empty()) {
        throw DomainError("make_factorizable_observable: no components");
    }
    const std::size_t theta_size = components.front().first.theta_size();
    OutcomeSet o1 = components.front().first.outcomes();
    OutcomeSet o2 = components.front().second.outcomes();
    Factorization f{std::move(components), std::move(nu), support ? *support : all_indices(theta_size)};
    validate_factorization(f, o1, o2, theta_size);
    f.nu = validated_probabilities(f.nu, "factorization weights");

    const std::size_t width = o1.size() * o2.size();
    if (off_support_rows && (off_support_rows->rows() != theta_size || off_support_rows->cols() != width)) {
        throw DimensionError("make_factorizable_observable: off-support rows have the wrong shape");
    }
    std::vector<double> data;
    for (std::size_t t = 0; t < theta_size; ++t) {
        const bool on_support = std::binary_search(f.support.begin(), f.support.end(), t);
        if (on_support || !off_support_rows) {
            const auto row = mixture_row(f, t, width);
            data.insert(data.end(), row.begin(), row.end());
        } else {
            const auto row = off_support_rows->row(t);
            data.insert(data.end(), row.begin(), row.end());
        }
    }
    StochasticKernel kernel(theta_size, width, std::move(data));
    return JointObservable(std::move(o1), std::move(o2), std::move(kernel), Provenance::factorizable, std::move(f));
}

namespace {

std::vector<double> mix_rows(const StochasticKernel& kernel, const InformationState& state) {
    std::vector<double> mu(kernel.cols(), 0.0);
    for (std::size_t t : state.support()) {
        const auto row = kernel.row(t);
        for (std::size_t c = 0; c < row.size(); ++c) {
            mu[c] += state.pi()[t] * row[c];
        }
    }
    return mu;
}

}  // namespace

std::vector<double> outcome_distribution(const GeneralizedObservable& observable, const InformationState& state) {
    require_theta(observable.theta_size(), state.size(), "outcome_distribution");
    return mix_rows(observable.kernel(), state);
}

std::vector<double> outcome_distribution(const JointObservable& observable, const InformationState& state) {
    require_theta(observable.theta_size(), state.size(), "outcome_distribution");
    return mix_rows(observable.kernel(), state);
}

GeneralizedObservable marginal_observable(const JointObservable& joint, Side side) {
    const std::size_t n1 = joint.outcomes1().size();
    const std::size_t n2 = joint.outcomes2().size();
    const std::size_t width = side == Side::first ? n1 : n2;
    std::vector<double> data(joint.theta_size() * width, 0.0);
    for (std::size_t t = 0; t < joint.theta_size(); ++t) {
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = 0; j < n2; ++j) {
                data[t * width + (side == Side::first ? i : j)] += joint.kernel()(t, i * n2 + j);
            }
        }
    }
    return GeneralizedObservable(side == Side::first ? joint.outcomes1() : joint.outcomes2(),
                                 StochasticKernel(joint.theta_size(), width, std::move(data)));
}

Expectations expectation_values(const JointObservable& joint, const InformationState& state) {
    require_theta(joint.theta_size(), state.size(), "expectation_values");
    Expectations e;
    e.f1 = marginal_observable(joint, Side::first).mean_function();
    e.f2 = marginal_observable(joint, Side::second).mean_function();
    const auto& v1 = joint.outcomes1().values();
    const auto& v2 = joint.outcomes2().values();
    e.f_joint.assign(joint.theta_size(), 0.0);
    for (std::size_t t = 0; t < joint.theta_size(); ++t) {
        for (std::size_t i = 0; i < v1.size(); ++i) {
            for (std::size_t j = 0; j < v2.size(); ++j) {
                e.f_joint[t] += v1[i] * v2[j] * joint.kernel()(t, i * v2.size() + j);
            }
        }
    }
    for (std::size_t t : state.support()) {
        e.e1 += state.pi()[t] * e.f1[t];
        e.e2 += state.pi()[t] * e.f2[t];
        e.e12 += state.pi()[t] * e.f_joint[t];
    }

    const double c1 = joint.outcomes1().bound();
    const double c2 = joint.outcomes2().bound();
    for (std::size_t t = 0; t < joint.theta_size(); ++t) {
        if (std::abs(e.f1[t]) > c1 + kRowTolerance || std::abs(e.f2[t]) > c2 + kRowTolerance ||
            std::abs(e.f_joint[t]) > c1 * c2 + kRowTolerance) {
            throw InvariantError("expectation_values: random variable exceeds its outcome bound at point " +
                                 std::to_string(t));
        }
    }
    return e;
}

InequalityReport general_pair_bound(double e_first, double e_second, double c1, double c2, Sign sign, double tol) {
    if (!(c1 > 0) || !(c2 > 0)) {
        throw DomainError("general_pair_bound: outcome bounds must be positive");
    }
    const double cc = c1 * c2;
    if (std::abs(e_first) > cc + tol || std::abs(e_second) > cc + tol) {
        throw DomainError("general_pair_bound: |E| exceeds C1*C2");
    }
    const double s = sign_value(sign);
    auto report = InequalityReport::make("general_pair_bound", std::abs(e_first + s * e_second),
                                         cc + s * e_first * e_second / cc, tol);
    report.sign = sign_symbol(sign);
    return report;
}

}  // namespace locreal
