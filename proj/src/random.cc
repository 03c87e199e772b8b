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

#include "locreal/random.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace locreal {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    for (auto& word : s_) {
        word = splitmix64(seed);
    }
}

Rng::result_type Rng::operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::below(std::uint64_t n) {
    // Lemire's multiply-shift with rejection.
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
        const unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * n;
        if (static_cast<std::uint64_t>(m) >= threshold) {
            return static_cast<std::uint64_t>(m >> 64);
        }
    }
}

std::size_t sample_index(std::span<const double> cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto k = static_cast<std::size_t>(it - cdf.begin());
    return std::min(k, cdf.size() - 1);
}

std::array<double, 3> random_unit_vector(Rng& rng) {
    while (true) {
        std::array<double, 3> v{rng.normal(), rng.normal(), rng.normal()};
        const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (norm > 1e-8) {
            for (auto& x : v) {
                x /= norm;
            }
            return v;
        }
    }
}

std::vector<Complex> random_pure_state(std::size_t d, Rng& rng) {
    std::vector<Complex> psi(d);
    double norm = 0;
    while (norm < 1e-12) {
        norm = 0;
        for (auto& z : psi) {
            z = Complex(rng.normal(), rng.normal());
            norm += std::norm(z);
        }
    }
    norm = std::sqrt(norm);
    for (auto& z : psi) {
        z /= norm;
    }
    return psi;
}

ComplexMatrix random_density_matrix(std::size_t d, Rng& rng) {
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            g(i, j) = Complex(rng.normal(), rng.normal());
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            rho(j, i) = std::conj(rho(i, j));
        }
        rho(i, i) = rho(i, i).real();
    }
    return rho;
}

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
    ComplexMatrix h(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        h(i, i) = rng.normal();
        for (std::size_t j = i + 1; j < d; ++j) {
            h(i, j) = Complex(rng.normal(), rng.normal());
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

std::vector<double> random_probabilities(std::size_t n, Rng& rng) {
    std::vector<double> p(n);
    double total = 0;
    for (auto& x : p) {
        double u = rng.uniform();
        while (u <= 0.0) {
            u = rng.uniform();
        }
        x = -std::log(u);
        total += x;
    }
    for (auto& x : p) {
        x /= total;
    }
    return p;
}

}  // namespace locreal
