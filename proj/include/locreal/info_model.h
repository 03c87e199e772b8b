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

#ifndef LOCREAL_INFO_MODEL_H
#define LOCREAL_INFO_MODEL_H

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locreal/report.h"

namespace locreal {

/// Finite set Theta of labelled points with a probability distribution pi.
class InformationState {
   public:
    /// Throws DomainError unless pi is a probability vector (sum within 1e-9).
    InformationState(std::vector<std::string> labels, std::vector<double> pi);
    /// Uniform distribution over `n` points labelled "t0", "t1", ...
    static InformationState uniform(std::size_t n);

    std::size_t size() const { return pi_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& pi() const { return pi_; }
    /// Indices with pi > 0, ascending.
    const std::vector<std::size_t>& support() const { return support_; }

   private:
    std::vector<std::string> labels_;
    std::vector<double> pi_;
    std::vector<std::size_t> support_;
};

/// Finite set of real outcome values, each bounded in magnitude by `bound`.
class OutcomeSet {
   public:
    OutcomeSet(std::vector<double> values, double bound = 1.0);
    /// {+1, -1} with bound 1.
    static OutcomeSet plus_minus_one();

    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double bound() const { return bound_; }
    /// Index of `value` (exact match within 1e-12), or nullopt.
    std::optional<std::size_t> index_of(double value) const;

    friend bool operator==(const OutcomeSet&, const OutcomeSet&) = default;

   private:
    std::vector<double> values_;
    double bound_ = 1.0;
};

/// Row-stochastic matrix: row theta is a probability distribution over outcomes.
///
/// Rows whose sum is within 1e-9 of one are renormalized; anything further off
/// is rejected with DomainError.
class StochasticKernel {
   public:
    StochasticKernel() = default;
    StochasticKernel(std::size_t rows, std::size_t cols, std::vector<double> data);
    static StochasticKernel from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<std::vector<double>> to_rows() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double max_abs_diff(const StochasticKernel& a, const StochasticKernel& b);

/// Stochastic kernel theta -> distribution over a finite outcome set.
class GeneralizedObservable {
   public:
    GeneralizedObservable(OutcomeSet outcomes, StochasticKernel kernel);
    /// Every row equal to `distribution`: carries no information about theta.
    static GeneralizedObservable trivial(OutcomeSet outcomes, std::vector<double> distribution,
                                         std::size_t theta_size);
    /// Row theta puts unit mass on values[theta].
    static GeneralizedObservable deterministic(OutcomeSet outcomes, std::span<const double> values);

    const OutcomeSet& outcomes() const { return outcomes_; }
    const StochasticKernel& kernel() const { return kernel_; }
    std::size_t theta_size() const { return kernel_.rows(); }

    /// f(theta) = sum_lambda lambda * kernel(theta, lambda).
    std::vector<double> mean_function() const;

   private:
    OutcomeSet outcomes_;
    StochasticKernel kernel_;
};

enum class Provenance { image, product, factorizable, opaque };
const char* provenance_name(Provenance p);

using ObservablePair = std::pair<GeneralizedObservable, GeneralizedObservable>;

/// Explicit mixture-of-products representation valid on `support`.
struct Factorization {
    std::vector<ObservablePair> components;
    std::vector<double> nu;
    /// The set F, as ascending theta indices.
    std::vector<std::size_t> support;

    bool covers(std::span<const std::size_t> indices) const;
};

/// Generalized observable with outcome set Lambda1 x Lambda2. Kernel columns
/// are ordered (i1, i2) -> i1 * |Lambda2| + i2.
class JointObservable {
   public:
    /// Opaque joint observable; no factorization is assumed.
    JointObservable(OutcomeSet outcomes1, OutcomeSet outcomes2, StochasticKernel kernel);
    /// Kernel with a declared representation. Throws DomainError unless every
    /// kernel row on the support equals the declared mixture within 1e-9.
    JointObservable(OutcomeSet outcomes1, OutcomeSet outcomes2, StochasticKernel kernel, Provenance provenance,
                    Factorization factorization);

    const OutcomeSet& outcomes1() const { return outcomes1_; }
    const OutcomeSet& outcomes2() const { return outcomes2_; }
    const StochasticKernel& kernel() const { return kernel_; }
    std::size_t theta_size() const { return kernel_.rows(); }
    Provenance provenance() const { return provenance_; }
    /// Present for image, product and factorizable provenance.
    const std::optional<Factorization>& factorization() const { return factorization_; }

   private:
    OutcomeSet outcomes1_;
    OutcomeSet outcomes2_;
    StochasticKernel kernel_;
    Provenance provenance_ = Provenance::opaque;
    std::optional<Factorization> factorization_;
};

/// Deterministic kernel of the random variables f1, f2 (classical joint
/// measurement). Throws DomainError when a value is not in its outcome set.
JointObservable make_image_observable(std::span<const double> f1, std::span<const double> f2,
                                      OutcomeSet outcomes1 = OutcomeSet::plus_minus_one(),
                                      OutcomeSet outcomes2 = OutcomeSet::plus_minus_one());
/// Label-keyed form; both maps must be total on `theta`.
JointObservable make_image_observable(const std::vector<std::string>& theta,
                                      const std::map<std::string, double>& f1,
                                      const std::map<std::string, double>& f2,
                                      OutcomeSet outcomes1 = OutcomeSet::plus_minus_one(),
                                      OutcomeSet outcomes2 = OutcomeSet::plus_minus_one());

JointObservable make_product_observable(const GeneralizedObservable& p1, const GeneralizedObservable& p2);

/// Mixture sum_omega nu(omega) P1_omega x P2_omega on the set `support`
/// (default: all of Theta). Rows off the support are taken from
/// `off_support_rows` when given, otherwise from the same mixture.
JointObservable make_factorizable_observable(std::vector<ObservablePair> components, std::vector<double> nu,
                                             std::optional<std::vector<std::size_t>> support = std::nullopt,
                                             std::optional<StochasticKernel> off_support_rows = std::nullopt);

std::vector<double> outcome_distribution(const GeneralizedObservable& observable, const InformationState& state);
/// Flattened over (i1, i2) like the kernel columns.
std::vector<double> outcome_distribution(const JointObservable& observable, const InformationState& state);

enum class Side { first = 1, second = 2 };

GeneralizedObservable marginal_observable(const JointObservable& joint, Side side);

struct Expectations {
    double e1 = 0;
    double e2 = 0;
    double e12 = 0;
    std::vector<double> f1;
    std::vector<double> f2;
    std::vector<double> f_joint;
};

/// Expectations of lambda1, lambda2 and lambda1*lambda2 together with the
/// random variables f1, f2, f_joint on Theta. f_joint is always summed from
/// the joint kernel, never taken as f1*f2.
Expectations expectation_values(const JointObservable& joint, const InformationState& state);

/// |E1 +- E2| <= C1 C2 +- E1 E2 / (C1 C2). Holds for every pair of valid
/// correlations; throws DomainError when |E| > C1 C2.
InequalityReport general_pair_bound(double e_first, double e_second, double c1, double c2, Sign sign,
                                    double tol = kDefaultTolerance);

}  // namespace locreal

#endif
