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

#include "locreal/violation_search.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "locreal/errors.h"
#include "locreal/random.h"

namespace locreal {
namespace {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }
double norm(const Vec3& x) { return std::sqrt(dot(x, x)); }

Vec3 apply(const Mat3& t, const Vec3& b) {
    return {dot(t[0], b), dot(t[1], b), dot(t[2], b)};
}

Vec3 apply_transpose(const Mat3& t, const Vec3& a) {
    Vec3 out{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out[j] += t[i][j] * a[i];
        }
    }
    return out;
}

Vec3 axpy(double alpha, const Vec3& x, const Vec3& y) {
    return {alpha * x[0] + y[0], alpha * x[1] + y[1], alpha * x[2] + y[2]};
}

// T_ij = tr[rho (sigma_i (x) sigma_j)].
Mat3 correlation_tensor(const DensityOperator& rho) {
    const std::array<ComplexMatrix, 3> paulis{pauli_x(), pauli_y(), pauli_z()};
    Mat3 t{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            t[i][j] = trace_of_product(rho.matrix(), tensor_product(paulis[i], paulis[j])).real();
        }
    }
    return t;
}

struct Directions {
    std::array<Vec3, 4> n;  // a1, a2, b1, b2
};

double objective(const Mat3& t, const Matrix2& g, const Directions& d) {
    double f = 0;
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            f += g[k][m] * dot(d.n[k], apply(t, d.n[2 + m]));
        }
    }
    return f;
}

Vec3 bob_field(const Mat3& t, const Matrix2& g, const Directions& d, int m) {
    Vec3 r{};
    for (int k = 0; k < 2; ++k) {
        r = axpy(g[k][m], apply_transpose(t, d.n[k]), r);
    }
    return r;
}

Vec3 alice_field(const Mat3& t, const Matrix2& g, const Directions& d, int k) {
    Vec3 r{};
    for (int m = 0; m < 2; ++m) {
        r = axpy(g[k][m], apply(t, d.n[2 + m]), r);
    }
    return r;
}

void align(Vec3& n, const Vec3& field) {
    const double len = norm(field);
    if (len >= 1e-12) {
        n = {field[0] / len, field[1] / len, field[2] / len};
    }
}

// Optimal Bob directions for fixed Alice; returns the resulting value.
double best_bob(const Mat3& t, const Matrix2& g, Directions& d) {
    for (int m = 0; m < 2; ++m) {
        align(d.n[2 + m], bob_field(t, g, d, m));
    }
    return objective(t, g, d);
}

double bob_value(const Mat3& t, const Matrix2& g, const Vec3& a1, const Vec3& a2) {
    double v = 0;
    for (int m = 0; m < 2; ++m) {
        Vec3 r = axpy(g[0][m], apply_transpose(t, a1), Vec3{});
        r = axpy(g[1][m], apply_transpose(t, a2), r);
        v += norm(r);
    }
    return v;
}

Vec3 grid_point(int i, int j, int polar_steps, int azimuth_steps) {
    const double theta = polar_steps > 1 ? std::numbers::pi * i / (polar_steps - 1) : 0.0;
    const double phi = 2.0 * std::numbers::pi * j / azimuth_steps;
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

struct GridBest {
    double value = -1;
    std::size_t first = 0;
    std::size_t second = 0;

    bool better_than(const GridBest& other) const {
        if (value != other.value) {
            return value > other.value;
        }
        return std::pair(first, second) < std::pair(other.first, other.second);
    }
};

std::string describe(const std::vector<QubitSetting>& settings) {
    static const char* names[] = {"a1", "a2", "b1", "b2"};
    std::ostringstream os;
    os.precision(12);
    for (std::size_t i = 0; i < settings.size(); ++i) {
        const auto& b = settings[i].bloch;
        os << (i ? "; " : "") << names[i] << "=(" << b[0] << ", " << b[1] << ", " << b[2] << ")";
    }
    return os.str();
}

}  // namespace

QubitSetting::QubitSetting(std::array<double, 3> direction, double v) : bloch(direction), visibility(v) {
    const double len = norm(bloch);
    if (std::abs(len - 1.0) > 1e-12) {
        throw DomainError("QubitSetting: Bloch vector has norm " + std::to_string(len) + ", expected 1");
    }
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw DomainError("QubitSetting: visibility must lie in [0, 1]");
    }
}

QubitSetting QubitSetting::from_angles(double theta, double phi, double visibility) {
    Vec3 n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
    const double len = norm(n);
    for (auto& x : n) {
        x /= len;
    }
    return QubitSetting(n, visibility);
}

QubitSetting QubitSetting::in_xz_plane(double degrees, double visibility) {
    return from_angles(degrees * std::numbers::pi / 180.0, 0.0, visibility);
}

PovMeasure qubit_projective_pov(const QubitSetting& setting) {
    const auto& n = setting.bloch;
    ComplexMatrix n_sigma = pauli_x() * Complex(n[0]) + pauli_y() * Complex(n[1]) + pauli_z() * Complex(n[2]);
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix plus = (id + n_sigma * Complex(setting.visibility)) * Complex(0.5);
    ComplexMatrix minus = (id - n_sigma * Complex(setting.visibility)) * Complex(0.5);
    return PovMeasure(OutcomeSet::plus_minus_one(), {std::move(plus), std::move(minus)});
}

const char* bound_method_name(BoundMethod m) {
    switch (m) {
        case BoundMethod::enumeration:
            return "enumeration";
        case BoundMethod::spectral:
            return "spectral";
        case BoundMethod::seesaw:
            return "seesaw";
    }
    return "enumeration";
}

BoundResult classical_lhv_bound(const ChshCoefficients& coeffs) {
    BoundResult best;
    best.value = -1;
    best.method = BoundMethod::enumeration;
    const auto& g = coeffs.gamma();
    for (int mask = 0; mask < 16; ++mask) {
        const std::array<int, 4> s{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1, mask & 8 ? -1 : 1};
        double v = 0;
        for (int k = 0; k < 2; ++k) {
            for (int m = 0; m < 2; ++m) {
                v += g[k][m] * s[k] * s[2 + m];
            }
        }
        if (std::abs(v) > best.value) {
            best.value = std::abs(v);
            best.strategy = s;
        }
    }
    std::ostringstream os;
    os << "alpha=(" << best.strategy[0] << ", " << best.strategy[1] << "), beta=(" << best.strategy[2] << ", "
       << best.strategy[3] << ")";
    best.witness = os.str();
    return best;
}

BoundResult quantum_max_value(const ChshCoefficients& coeffs, const QuantumChshSettings& settings) {
    const std::size_t d1 = settings.alice1.dim();
    const std::size_t d2 = settings.bob1.dim();
    if (settings.alice2.dim() != d1 || settings.bob2.dim() != d2) {
        throw DimensionError("quantum_max_value: settings on one side act on different dimensions");
    }
    ComplexMatrix bell(d1 * d2, d1 * d2);
    for (int k = 0; k < 2; ++k) {
        const ComplexMatrix ak = correlation_operator(settings.alice(k));
        for (int m = 0; m < 2; ++m) {
            bell += tensor_product(ak, correlation_operator(settings.bob(m))) * Complex(coeffs.gamma()[k][m]);
        }
    }
    const auto spectrum = eigh(bell);
    const double top = spectrum.eigenvalues.front();
    const double bottom = spectrum.eigenvalues.back();
    const std::size_t col = std::abs(top) >= std::abs(bottom) ? 0 : spectrum.eigenvalues.size() - 1;

    BoundResult result;
    result.method = BoundMethod::spectral;
    result.value = std::abs(spectrum.eigenvalues[col]);
    for (std::size_t i = 0; i < bell.rows(); ++i) {
        result.state.push_back(spectrum.eigenvectors(i, col));
    }
    std::ostringstream os;
    os.precision(17);
    os << "eigenvalue " << spectrum.eigenvalues[col] << " of the Bell operator";
    result.witness = os.str();
    return result;
}

double evaluate_settings(const DensityOperator& rho, const ChshCoefficients& coeffs,
                         const std::vector<QubitSetting>& settings) {
    if (settings.size() != 4) {
        throw DomainError("evaluate_settings: expected four settings (a1, a2, b1, b2)");
    }
    Matrix2 e{};
    for (int k = 0; k < 2; ++k) {
        for (int m = 0; m < 2; ++m) {
            e[k][m] = correlation(rho, qubit_projective_pov(settings[k]), qubit_projective_pov(settings[2 + m]));
        }
    }
    return std::abs(chsh_functional(e, coeffs));
}

BoundResult search_settings(const DensityOperator& rho, const ChshCoefficients& coeffs, const SearchBudget& budget,
                            std::uint64_t seed) {
    if (rho.dim() != 4) {
        throw DimensionError("search_settings: only two-qubit states (4x4) are supported");
    }
    if (budget.polar_steps < 1 || budget.azimuth_steps < 1 || budget.max_rounds < 0 || budget.random_starts < 0) {
        throw DomainError("search_settings: invalid budget");
    }
    const Mat3 t = correlation_tensor(rho);
    const Matrix2& g = coeffs.gamma();

    // Grid over Alice's pair; Bob's optimum is closed form. The value is even
    // under (a1, a2) -> (-a1, -a2), so a1 is restricted to the upper
    // hemisphere when the grid is antipodally symmetric.
    std::vector<Vec3> points;
    for (int i = 0; i < budget.polar_steps; ++i) {
        for (int j = 0; j < budget.azimuth_steps; ++j) {
            points.push_back(grid_point(i, j, budget.polar_steps, budget.azimuth_steps));
        }
    }
    std::size_t first_limit = points.size();
    if (budget.azimuth_steps % 2 == 0 && budget.polar_steps > 1) {
        first_limit = static_cast<std::size_t>((budget.polar_steps + 1) / 2) * budget.azimuth_steps;
    }

    const unsigned jobs = std::max(1u, std::min<unsigned>(budget.jobs, static_cast<unsigned>(first_limit)));
    std::vector<GridBest> partial(jobs);
    auto scan = [&](unsigned worker) {
        GridBest best;
        for (std::size_t i = worker; i < first_limit; i += jobs) {
            for (std::size_t j = 0; j < points.size(); ++j) {
                GridBest candidate{bob_value(t, g, points[i], points[j]), i, j};
                if (candidate.better_than(best)) {
                    best = candidate;
                }
            }
        }
        partial[worker] = best;
    };
    if (jobs == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back(scan, w);
        }
    }
    GridBest grid_best = partial.front();
    for (const auto& p : partial) {
        if (p.better_than(grid_best)) {
            grid_best = p;
        }
    }

    std::vector<Directions> starts;
    {
        Directions d;
        d.n[0] = points[grid_best.first];
        d.n[1] = points[grid_best.second];
        d.n[2] = d.n[3] = Vec3{0, 0, 1};
        starts.push_back(d);
    }
    Rng rng(seed);
    for (int r = 0; r < budget.random_starts; ++r) {
        Directions d;
        for (auto& n : d.n) {
            n = random_unit_vector(rng);
        }
        starts.push_back(d);
    }

    Directions best_dirs{};
    std::vector<double> best_history;
    double best_value = -std::numeric_limits<double>::infinity();
    for (auto d : starts) {
        std::vector<double> history{best_bob(t, g, d)};
        for (int round = 0; round < budget.max_rounds; ++round) {
            for (int k = 0; k < 2; ++k) {
                align(d.n[k], alice_field(t, g, d, k));
            }
            for (int m = 0; m < 2; ++m) {
                align(d.n[2 + m], bob_field(t, g, d, m));
            }
            const double value = objective(t, g, d);
            const double gain = value - history.back();
            history.push_back(value);
            if (gain < budget.convergence) {
                break;
            }
        }
        if (history.back() > best_value) {
            best_value = history.back();
            best_dirs = d;
            best_history = std::move(history);
        }
    }

    BoundResult result;
    result.method = BoundMethod::seesaw;
    result.value = std::abs(best_value);
    result.history = std::move(best_history);
    for (const auto& n : best_dirs.n) {
        Vec3 unit = n;
        const double len = norm(unit);
        for (auto& x : unit) {
            x /= len;
        }
        result.settings.emplace_back(unit);
    }
    result.witness = describe(result.settings);
    return result;
}

}  // namespace locreal
