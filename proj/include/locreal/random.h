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

#ifndef LOCREAL_RANDOM_H
#define LOCREAL_RANDOM_H

#include <array>
#include <cstdint>
#include <limits>
#include <span>

#include "locreal/linalg.h"

namespace locreal {

/// xoshiro256** seeded through splitmix64. Period 2^256 - 1.
///
/// Satisfies UniformRandomBitGenerator, but the helpers below are used
/// instead of <random> distributions so that streams are identical across
/// standard library implementations.
class Rng {
   public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal (Box-Muller).
    double normal();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

   private:
    std::array<std::uint64_t, 4> s_;
};

/// Seed of the independent stream for setting `index`.
constexpr std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t index) {
    return base_seed + index * 0x9E3779B97F4A7C15ULL;
}

/// Smallest k with cdf[k] > u, clamped to the last index.
std::size_t sample_index(std::span<const double> cdf, double u);

/// Uniformly distributed point on the unit sphere in R^3.
std::array<double, 3> random_unit_vector(Rng& rng);

/// Haar-random pure state in C^d.
std::vector<Complex> random_pure_state(std::size_t d, Rng& rng);

/// Random full-rank density matrix G G^dag / tr, G Ginibre d x d.
ComplexMatrix random_density_matrix(std::size_t d, Rng& rng);

/// Random Hermitian matrix with independent normal entries.
ComplexMatrix random_hermitian(std::size_t d, Rng& rng);

/// Probability vector drawn uniformly from the simplex.
std::vector<double> random_probabilities(std::size_t n, Rng& rng);

}  // namespace locreal

#endif
