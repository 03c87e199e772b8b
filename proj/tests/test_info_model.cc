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

#include <gtest/gtest.h>

#include <cmath>

#include "generators.h"
#include "locreal/errors.h"
#include "locreal/info_model.h"

namespace locreal {
namespace {

using testing::random_observable;
using testing::random_outcome_set;
using testing::random_state;

double kernel_diff(const StochasticKernel& a, const StochasticKernel& b) { return max_abs_diff(a, b); }

TEST(InformationState, ValidatesAndTracksSupport) {
    const InformationState s({"x", "y", "z"}, {0.5, 0.0, 0.5});
    EXPECT_EQ(s.support(), (std::vector<std::size_t>{0, 2}));
    EXPECT_THROW(InformationState({}, {0.5, 0.6}), DomainError);
    EXPECT_THROW(InformationState({}, {1.2, -0.2}), DomainError);
    EXPECT_THROW(InformationState({"a"}, {0.5, 0.5}), DimensionError);
    EXPECT_EQ(InformationState::uniform(3).labels(), (std::vector<std::string>{"t0", "t1", "t2"}));
}

TEST(OutcomeSet, RejectsValuesAboveBound) {
    EXPECT_THROW(OutcomeSet({1.5, -1}), DomainError);
    EXPECT_NO_THROW(OutcomeSet({1.5, -1}, 2.0));
}

TEST(StochasticKernel, NormalizesWithinToleranceRejectsBeyond) {
    const auto k = StochasticKernel::from_rows({{0.5, 0.5 + 5e-10}});
    EXPECT_NEAR(k(0, 0) + k(0, 1), 1.0, 1e-15);
    EXPECT_THROW(StochasticKernel::from_rows({{0.5, 0.6}}), DomainError);
    EXPECT_THROW(StochasticKernel::from_rows({{1.1, -0.1}}), DomainError);
}

TEST(ImageObservable, SinglePointKernel) {
    const std::vector<double> f1{1};
    const std::vector<double> f2{-1};
    const auto j = make_image_observable(f1, f2);
    // Columns (+,+), (+,-), (-,+), (-,-).
    EXPECT_EQ(j.kernel().to_rows(), (std::vector<std::vector<double>>{{0, 1, 0, 0}}));
    EXPECT_EQ(j.provenance(), Provenance::image);
}

TEST(ImageObservable, PerfectCorrelation) {
    const std::vector<double> f{1, -1};
    const auto e = expectation_values(make_image_observable(f, f), InformationState::uniform(2));
    EXPECT_DOUBLE_EQ(e.e12, 1.0);
}

TEST(ImageObservable, DirectSummationOracle) {
    const std::vector<double> f1{1, -1, -1, 1};
    const std::vector<double> f2{1, 1, -1, -1};
    const InformationState s({}, {0.1, 0.2, 0.3, 0.4});
    const auto e = expectation_values(make_image_observable(f1, f2), s);
    EXPECT_NEAR(e.e12, 0.1 - 0.2 + 0.3 - 0.4, 1e-15);
    for (std::size_t t = 0; t < 4; ++t) {
        EXPECT_EQ(e.f_joint[t], f1[t] * f2[t]);
    }
}

TEST(ImageObservable, RejectsValueOutsideOutcomeSet) {
    const std::vector<double> f1{0.5};
    const std::vector<double> f2{1};
    EXPECT_THROW(make_image_observable(f1, f2), DomainError);
}

TEST(ImageObservable, LabelledForm) {
    const auto j = make_image_observable({"p", "q"}, {{"p", 1}, {"q", -1}}, {{"p", -1}, {"q", -1}});
    EXPECT_EQ(j.kernel().to_rows(), (std::vector<std::vector<double>>{{0, 1, 0, 0}, {0, 0, 0, 1}}));
    EXPECT_THROW(make_image_observable({"p", "r"}, {{"p", 1}}, {{"p", 1}}), DomainError);
}

TEST(ProductObservable, DeterministicFactorsGiveImage) {
    const std::vector<double> f1{1, -1};
    const std::vector<double> f2{-1, -1};
    const auto o = OutcomeSet::plus_minus_one();
    const auto p = make_product_observable(GeneralizedObservable::deterministic(o, f1),
                                           GeneralizedObservable::deterministic(o, f2));
    EXPECT_EQ(kernel_diff(p.kernel(), make_image_observable(f1, f2).kernel()), 0.0);
    EXPECT_EQ(p.provenance(), Provenance::product);
}

TEST(ProductObservable, RowIsOuterProduct) {
    const OutcomeSet o = OutcomeSet::plus_minus_one();
    const GeneralizedObservable p1(o, StochasticKernel::from_rows({{0.3, 0.7}, {0.9, 0.1}}));
    const GeneralizedObservable p2(o, StochasticKernel::from_rows({{0.25, 0.75}, {0.5, 0.5}}));
    const auto j = make_product_observable(p1, p2);
    const std::vector<std::vector<double>> expected{{0.075, 0.225, 0.175, 0.525}, {0.45, 0.45, 0.05, 0.05}};
    const auto rows = j.kernel().to_rows();
    for (std::size_t t = 0; t < 2; ++t) {
        for (std::size_t c = 0; c < 4; ++c) {
            EXPECT_NEAR(rows[t][c], expected[t][c], 1e-15);
        }
    }
    EXPECT_EQ(kernel_diff(marginal_observable(j, Side::first).kernel(), p1.kernel()) < 1e-15, true);
    EXPECT_EQ(kernel_diff(marginal_observable(j, Side::second).kernel(), p2.kernel()) < 1e-15, true);
}

TEST(ProductObservable, ThetaMismatch) {
    Rng rng(1);
    const auto o = OutcomeSet::plus_minus_one();
    EXPECT_THROW(make_product_observable(random_observable(o, 2, rng), random_observable(o, 3, rng)), DimensionError);
}

TEST(FactorizableObservable, DiracWeightEqualsProduct) {
    Rng rng(2);
    const auto o = OutcomeSet::plus_minus_one();
    const auto p1 = random_observable(o, 3, rng);
    const auto p2 = random_observable(o, 3, rng);
    const auto q1 = random_observable(o, 3, rng);
    const auto q2 = random_observable(o, 3, rng);
    const auto f = make_factorizable_observable({{p1, p2}, {q1, q2}}, {1.0, 0.0});
    EXPECT_LT(kernel_diff(f.kernel(), make_product_observable(p1, p2).kernel()), 1e-15);
    const auto same = make_factorizable_observable({{p1, p2}, {p1, p2}}, {0.4, 0.6});
    EXPECT_LT(kernel_diff(same.kernel(), make_product_observable(p1, p2).kernel()), 1e-15);
}

TEST(FactorizableObservable, EvenMixtureAveragesKernels) {
    Rng rng(3);
    const auto o = OutcomeSet::plus_minus_one();
    const auto p1 = random_observable(o, 2, rng);
    const auto p2 = random_observable(o, 2, rng);
    const auto q1 = random_observable(o, 2, rng);
    const auto q2 = random_observable(o, 2, rng);
    const auto f = make_factorizable_observable({{p1, p2}, {q1, q2}}, {0.5, 0.5});
    const auto a = make_product_observable(p1, p2).kernel();
    const auto b = make_product_observable(q1, q2).kernel();
    for (std::size_t t = 0; t < 2; ++t) {
        for (std::size_t c = 0; c < 4; ++c) {
            EXPECT_NEAR(f.kernel()(t, c), 0.5 * (a(t, c) + b(t, c)), 1e-15);
        }
    }
    const auto m1 = marginal_observable(f, Side::first).kernel();
    for (std::size_t t = 0; t < 2; ++t) {
        for (std::size_t c = 0; c < 2; ++c) {
            EXPECT_NEAR(m1(t, c), 0.5 * (p1.kernel()(t, c) + q1.kernel()(t, c)), 1e-15);
        }
    }
}

TEST(FactorizableObservable, ErrorsAndOffSupportRows) {
    Rng rng(4);
    const auto o = OutcomeSet::plus_minus_one();
    const auto p1 = random_observable(o, 2, rng);
    const auto p2 = random_observable(o, 2, rng);
    EXPECT_THROW(make_factorizable_observable({{p1, p2}}, {0.7}), DomainError);
    EXPECT_THROW(make_factorizable_observable({{p1, random_observable(o, 3, rng)}}, {1.0}), ValidationError);
    const auto off = StochasticKernel::from_rows({{1, 0, 0, 0}, {0, 0, 0, 1}});
    const auto f = make_factorizable_observable({{p1, p2}}, {1.0}, std::vector<std::size_t>{0}, off);
    EXPECT_EQ(f.kernel().to_rows()[1], (std::vector<double>{0, 0, 0, 1}));
    EXPECT_LT(std::abs(f.kernel()(0, 0) - p1.kernel()(0, 0) * p2.kernel()(0, 0)), 1e-15);
}

TEST(JointObservable, DeclaredFactorizationIsValidated) {
    Rng rng(5);
    const auto o = OutcomeSet::plus_minus_one();
    const auto p1 = random_observable(o, 2, rng);
    const auto p2 = random_observable(o, 2, rng);
    const auto good = make_product_observable(p1, p2);
    const auto wrong = StochasticKernel::from_rows({{0.25, 0.25, 0.25, 0.25}, {0.25, 0.25, 0.25, 0.25}});
    EXPECT_THROW(JointObservable(o, o, wrong, Provenance::product, *good.factorization()), DomainError);
}

TEST(OutcomeDistribution, Oracles) {
    const OutcomeSet o = OutcomeSet::plus_minus_one();
    const auto trivial = GeneralizedObservable::trivial(o, {0.3, 0.7}, 3);
    Rng rng(6);
    for (int i = 0; i < 5; ++i) {
        const auto mu = outcome_distribution(trivial, random_state(3, rng));
        EXPECT_NEAR(mu[0], 0.3, 1e-15);
        EXPECT_NEAR(mu[1], 0.7, 1e-15);
    }
    const std::vector<double> values{1, -1};
    const auto det = outcome_distribution(GeneralizedObservable::deterministic(o, values), InformationState::uniform(2));
    EXPECT_NEAR(det[0], 0.5, 1e-15);
    EXPECT_NEAR(det[1], 0.5, 1e-15);
    const GeneralizedObservable g(o, StochasticKernel::from_rows({{0.2, 0.8}, {0.6, 0.4}}));
    const auto mu = outcome_distribution(g, InformationState({}, {0.25, 0.75}));
    EXPECT_NEAR(mu[0], 0.5, 1e-15);
    EXPECT_NEAR(mu[1], 0.5, 1e-15);
    EXPECT_THROW(outcome_distribution(g, InformationState::uniform(3)), DimensionError);
}

TEST(OutcomeDistribution, AffineInPi) {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const std::size_t theta = 1 + rng.below(6);
        const auto o = random_outcome_set(rng);
        const auto g = random_observable(o, theta, rng);
        const auto s1 = random_state(theta, rng, false);
        const auto s2 = random_state(theta, rng, false);
        const double p = rng.uniform();
        std::vector<double> mix(theta);
        for (std::size_t t = 0; t < theta; ++t) {
            mix[t] = p * s1.pi()[t] + (1 - p) * s2.pi()[t];
        }
        const auto mu = outcome_distribution(g, InformationState({}, mix));
        const auto mu1 = outcome_distribution(g, s1);
        const auto mu2 = outcome_distribution(g, s2);
        for (std::size_t k = 0; k < mu.size(); ++k) {
            EXPECT_NEAR(mu[k], p * mu1[k] + (1 - p) * mu2[k], 1e-12);
        }
    }
}

TEST(Expectations, OpaqueIndependentRows) {
    const OutcomeSet o = OutcomeSet::plus_minus_one();
    // mu1 = (0.7, 0.3), mu2 = (0.4, 0.6) on each row.
    const auto kernel = StochasticKernel::from_rows({{0.28, 0.42, 0.12, 0.18}, {0.28, 0.42, 0.12, 0.18}});
    const JointObservable j(o, o, kernel);
    const auto e = expectation_values(j, InformationState({}, {0.5, 0.5}));
    EXPECT_NEAR(e.e1, 0.4, 1e-15);
    EXPECT_NEAR(e.e2, -0.2, 1e-15);
    EXPECT_NEAR(e.e12, e.e1 * e.e2, 1e-15);
}

TEST(Expectations, OpaqueJointIsNotProductOfMeans) {
    const OutcomeSet o = OutcomeSet::plus_minus_one();
    const JointObservable j(o, o, StochasticKernel::from_rows({{0.5, 0, 0, 0.5}}));
    const auto e = expectation_values(j, InformationState::uniform(1));
    EXPECT_EQ(e.f1[0], 0.0);
    EXPECT_EQ(e.f2[0], 0.0);
    EXPECT_EQ(e.f_joint[0], 1.0);
}

TEST(Expectations, ProductDoubleSummation) {
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        const std::size_t theta = 3;
        const auto o1 = random_outcome_set(rng);
        const auto o2 = random_outcome_set(rng);
        const auto p1 = random_observable(o1, theta, rng);
        const auto p2 = random_observable(o2, theta, rng);
        const auto s = random_state(theta, rng);
        const auto e = expectation_values(make_product_observable(p1, p2), s);
        const auto f1 = p1.mean_function();
        const auto f2 = p2.mean_function();
        double expected = 0;
        for (std::size_t t = 0; t < theta; ++t) {
            expected += s.pi()[t] * f1[t] * f2[t];
            EXPECT_NEAR(e.f_joint[t], f1[t] * f2[t], 1e-12);
        }
        EXPECT_NEAR(e.e12, expected, 1e-12);
        EXPECT_LE(std::abs(e.e1), o1.bound() + 1e-9);
        EXPECT_LE(std::abs(e.e12), o1.bound() * o2.bound() + 1e-9);
    }
}

TEST(GeneralPairBound, Oracles) {
    const auto r0 = general_pair_bound(0, 0, 1, 1, Sign::plus);
    EXPECT_EQ(r0.lhs, 0.0);
    EXPECT_EQ(r0.rhs, 1.0);
    EXPECT_TRUE(r0.satisfied);
    const auto r1 = general_pair_bound(1, -1, 1, 1, Sign::minus);
    EXPECT_EQ(r1.lhs, 2.0);
    EXPECT_EQ(r1.rhs, 2.0);
    EXPECT_EQ(r1.margin, 0.0);
    EXPECT_TRUE(r1.satisfied);
    const auto r2 = general_pair_bound(0.6, -0.2, 1, 1, Sign::minus);
    EXPECT_NEAR(r2.lhs, 0.8, 1e-15);
    EXPECT_NEAR(r2.rhs, 1.12, 1e-15);
    EXPECT_THROW(general_pair_bound(1.2, 0, 1, 1, Sign::plus), DomainError);
}

TEST(GeneralPairBound, HoldsOnRandomValidInputs) {
    Rng rng(9);
    for (int i = 0; i < 1000; ++i) {
        const double c1 = 0.1 + rng.uniform();
        const double c2 = 0.1 + rng.uniform();
        const double e1 = (2 * rng.uniform() - 1) * c1 * c2;
        const double e2 = (2 * rng.uniform() - 1) * c1 * c2;
        EXPECT_TRUE(general_pair_bound(e1, e2, c1, c2, Sign::plus).satisfied);
        EXPECT_TRUE(general_pair_bound(e1, e2, c1, c2, Sign::minus).satisfied);
    }
}

TEST(Marginals, FactorizableMarginalsAreStochastic) {
    Rng rng(10);
    for (int i = 0; i < 50; ++i) {
        const auto sc = testing::random_factorizable_chsh(rng);
        for (int k = 0; k < 2; ++k) {
            for (int m = 0; m < 2; ++m) {
                for (Side side : {Side::first, Side::second}) {
                    const auto g = marginal_observable(sc.family.at(k, m), side);
                    for (std::size_t t = 0; t < g.theta_size(); ++t) {
                        double sum = 0;
                        for (double p : g.kernel().row(t)) {
                            EXPECT_GE(p, 0.0);
                            sum += p;
                        }
                        EXPECT_NEAR(sum, 1.0, 1e-9);
                    }
                }
            }
        }
    }
}

}  // namespace
}  // namespace locreal
