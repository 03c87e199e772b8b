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

#include "locreal/mc_sim.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "locreal/errors.h"
#include "locreal/random.h"

namespace locreal {
namespace {

std::vector<double> cumulative(std::span<const double> p) {
    std::vector<double> cdf(p.size());
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    return cdf;
}

void accumulate(SampleBatch& b, double l1, double l2) {
    const double l12 = l1 * l2;
    b.sum1 += l1;
    b.sum2 += l2;
    b.sum12 += l12;
    b.sumsq1 += l1 * l1;
    b.sumsq2 += l2 * l2;
    b.sumsq12 += l12 * l12;
}

void require_positive(std::uint64_t n, const char* who) {
    if (n == 0) {
        throw DomainError(std::string(who) + ": sample count must be at least 1");
    }
}

const Estimate& lookup(const EstimateMap& estimates, const SettingPair& key) {
    const auto it = estimates.find(key);
    if (it == estimates.end()) {
        throw DomainError("test_inequality: no estimate for setting pair (" + key.first + ", " + key.second + ")");
    }
    return it->second;
}

double z_score(double excess, double se) {
    if (se > 0) {
        return excess / se;
    }
    if (excess == 0) {
        return 0;
    }
    return excess > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

}  // namespace

void SampleBatch::merge(const SampleBatch& other) {
    n += other.n;
    sum1 += other.sum1;
    sum2 += other.sum2;
    sum12 += other.sum12;
    sumsq1 += other.sumsq1;
    sumsq2 += other.sumsq2;
    sumsq12 += other.sumsq12;
}

double SampleBatch::mean1() const { return sum1 / static_cast<double>(n); }
double SampleBatch::mean2() const { return sum2 / static_cast<double>(n); }
double SampleBatch::mean12() const { return sum12 / static_cast<double>(n); }

double SampleBatch::se12() const {
    if (n < 2) {
        return 0;
    }
    const double nn = static_cast<double>(n);
    const double var = std::max(0.0, (sumsq12 - sum12 * sum12 / nn) / (nn - 1));
    return std::sqrt(var / nn);
}

SampleBatch sample_info_joint(const JointObservable& joint, const InformationState& state, std::uint64_t n,
                              std::uint64_t seed, SamplingPath path) {
    require_positive(n, "sample_info_joint");
    if (joint.theta_size() != state.size()) {
        throw DimensionError("sample_info_joint: observable and information state disagree on |Theta|");
    }
    const std::size_t theta_n = state.size();
    const auto& v1 = joint.outcomes1().values();
    const auto& v2 = joint.outcomes2().values();
    const std::vector<double> theta_cdf = cumulative(state.pi());

    std::vector<std::vector<double>> row_cdf(theta_n);
    for (std::size_t t = 0; t < theta_n; ++t) {
        row_cdf[t] = cumulative(joint.kernel().row(t));
    }

    const auto& fac = joint.factorization();
    const bool split = path == SamplingPath::automatic && fac.has_value();
    std::vector<char> on_support(theta_n, 0);
    std::vector<double> nu_cdf;
    // side_cdf[side][omega][theta]
    std::array<std::vector<std::vector<std::vector<double>>>, 2> side_cdf;
    std::array<std::vector<const std::vector<double>*>, 2> side_values;
    if (split) {
        for (std::size_t t : fac->support) {
            on_support[t] = 1;
        }
        nu_cdf = cumulative(fac->nu);
        for (const auto& [p1, p2] : fac->components) {
            const std::array<const GeneralizedObservable*, 2> sides{&p1, &p2};
            for (int s = 0; s < 2; ++s) {
                std::vector<std::vector<double>> per_theta(theta_n);
                for (std::size_t t = 0; t < theta_n; ++t) {
                    per_theta[t] = cumulative(sides[s]->kernel().row(t));
                }
                side_cdf[s].push_back(std::move(per_theta));
                side_values[s].push_back(&sides[s]->outcomes().values());
            }
        }
    }

    Rng rng(seed);
    SampleBatch batch;
    batch.n = n;
    batch.seed = seed;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::size_t t = sample_index(theta_cdf, rng.uniform());
        double l1 = 0;
        double l2 = 0;
        if (split && on_support[t]) {
            const std::size_t w = sample_index(nu_cdf, rng.uniform());
            l1 = (*side_values[0][w])[sample_index(side_cdf[0][w][t], rng.uniform())];
            l2 = (*side_values[1][w])[sample_index(side_cdf[1][w][t], rng.uniform())];
        } else {
            const std::size_t c = sample_index(row_cdf[t], rng.uniform());
            l1 = v1[c / v2.size()];
            l2 = v2[c % v2.size()];
        }
        accumulate(batch, l1, l2);
    }
    return batch;
}

SampleBatch sample_quantum_joint(const DensityOperator& rho, const JointPov& joint, std::uint64_t n,
                                 std::uint64_t seed) {
    require_positive(n, "sample_quantum_joint");
    const std::vector<double> cdf = cumulative(quantum_outcome_distribution(rho, joint));
    const auto& v1 = joint.outcomes1().values();
    const auto& v2 = joint.outcomes2().values();
    Rng rng(seed);
    SampleBatch batch;
    batch.n = n;
    batch.seed = seed;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::size_t c = sample_index(cdf, rng.uniform());
        accumulate(batch, v1[c / v2.size()], v2[c % v2.size()]);
    }
    return batch;
}

StatisticalReport test_inequality(const EstimateMap& estimates, const ChshTestSpec& spec, double tol) {
    Matrix2 e{};
    double var = 0;
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            const Estimate& est = lookup(estimates, {spec.alice[k], spec.bob[m]});
            e[k][m] = est.mean;
            const double g = spec.coeffs.gamma()[k][m];
            var += g * g * est.se * est.se;
        }
    }
    StatisticalReport out;
    const double lhs = std::abs(chsh_functional(e, spec.coeffs));
    const bool constrained = spec.coeffs.constraint_class() != ConstraintClass::none;
    out.report = constrained ? InequalityReport::make("chsh", lhs, 2.0, tol)
                             : InequalityReport::functional_only("chsh", lhs, tol);
    out.report.conditions_checked.emplace_back("coefficient_constraint", constrained);
    if (!constrained) {
        out.se = std::sqrt(var);
        return out;
    }
    out.se = std::sqrt(var);
    out.z_violation = z_score(out.report.lhs - out.report.rhs, out.se);
    return out;
}

StatisticalReport test_inequality(const EstimateMap& estimates, const BellTestSpec& spec, double tol) {
    const Estimate& ab1 = lookup(estimates, spec.a_b1);
    const Estimate& ab2 = lookup(estimates, spec.a_b2);
    const Estimate& b1b2 = lookup(estimates, spec.b1_b2);
    StatisticalReport out;
    out.report = InequalityReport::make("bell", std::abs(ab1.mean - ab2.mean),
                                        1.0 - sign_value(spec.sign) * b1b2.mean, tol);
    out.report.sign = sign_symbol(spec.sign);
    out.se = std::sqrt(ab1.se * ab1.se + ab2.se * ab2.se + b1b2.se * b1b2.se);
    out.z_violation = z_score(out.report.lhs - out.report.rhs, out.se);
    return out;
}

}  // namespace locreal
