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

#ifndef LOCREAL_MC_SIM_H_
#define LOCREAL_MC_SIM_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "locreal/inequalities.h"
#include "locreal/info_model.h"
#include "locreal/quantum_model.h"
#include "locreal/report.h"

namespace locreal {

/// Accumulators of n draws of (lambda1, lambda2).
struct SampleBatch {
    std::uint64_t n = 0;
    double sum1 = 0;
    double sum2 = 0;
    double sum12 = 0;
    double sumsq1 = 0;
    double sumsq2 = 0;
    double sumsq12 = 0;
    std::uint64_t seed = 0;

    /// Adds the accumulators of `other`; keeps this batch's seed.
    void merge(const SampleBatch& other);
    double mean1() const;
    double mean2() const;
    double mean12() const;
    /// Standard error of mean12 from the sample variance.
    double se12() const;

    friend bool operator==(const SampleBatch&, const SampleBatch&) = default;
};

enum class SamplingPath {
    /// omega ~ nu, then independent sides, for factorizable-type observables
    /// on their support; kernel rows elsewhere.
    automatic,
    /// Always draw (lambda1, lambda2) from the joint kernel row.
    kernel,
};

/// theta ~ pi, then an outcome pair. Throws DomainError when n = 0 and
/// DimensionError when |Theta| disagrees.
SampleBatch sample_info_joint(const JointObservable& joint, const InformationState& state, std::uint64_t n,
                              std::uint64_t seed, SamplingPath path = SamplingPath::automatic);

/// Inverse-CDF draws from the exact joint outcome distribution.
SampleBatch sample_quantum_joint(const DensityOperator& rho, const JointPov& joint, std::uint64_t n,
                                 std::uint64_t seed);

/// Correlation estimate; se = 0 marks an exact value.
struct Estimate {
    double mean = 0;
    double se = 0;

    static Estimate from_batch(const SampleBatch& batch) { return {batch.mean12(), batch.se12()}; }
};

using EstimateMap = std::map<SettingPair, Estimate>;

struct ChshTestSpec {
    ChshCoefficients coeffs = ChshCoefficients::standard();
    /// Alice labels (a1, a2) and Bob labels (b1, b2).
    std::array<std::string, 2> alice{"a1", "a2"};
    std::array<std::string, 2> bob{"b1", "b2"};
};

struct BellTestSpec {
    SettingPair a_b1;
    SettingPair a_b2;
    SettingPair b1_b2;
    Sign sign = Sign::plus;
};

struct StatisticalReport {
    InequalityReport report;
    /// Standard error of lhs - rhs by propagation over independent batches.
    double se = 0;
    /// (lhs - rhs) / se; +-inf for exact inputs with nonzero margin.
    double z_violation = 0;
};

/// Plugs estimates into the CHSH functional against the bound 2. Throws
/// DomainError when a referenced setting pair is missing.
StatisticalReport test_inequality(const EstimateMap& estimates, const ChshTestSpec& spec,
                                  double tol = kDefaultTolerance);
/// |E(a,b1) - E(a,b2)| against 1 - s E(b1,b2).
StatisticalReport test_inequality(const EstimateMap& estimates, const BellTestSpec& spec,
                                  double tol = kDefaultTolerance);

}  // namespace locreal

#endif
