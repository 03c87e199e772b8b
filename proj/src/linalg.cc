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

#include "locreal/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "locreal/errors.h"

namespace locreal {
namespace {

void require_square(const ComplexMatrix& a, const char* what) {
    if (!a.is_square()) {
        throw DimensionError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", expected square");
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

double off_diagonal_norm_sq(const ComplexMatrix& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return s;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) + " entries for a " +
                             std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    }
    for (const auto& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError("ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer");
        }
        for (const auto& z : row) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw DomainError("ComplexMatrix: non-finite entry");
            }
            entries_.push_back(z);
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    require_square(*this, "trace");
    Complex t = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const auto& z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : entries_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("operator*: inner dimensions " + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + " differ");
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw DimensionError("trace_of_product: incompatible shapes");
    }
    Complex t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            t += a(i, k) * b(k, i);
        }
    }
    return t;
}

ComplexMatrix HermitianSpectrum::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix scaled = eigenvectors;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            scaled(i, k) *= eigenvalues[k];
        }
    }
    return scaled * eigenvectors.adjoint();
}

HermitianSpectrum eigh(const ComplexMatrix& input) {
    require_square(input, "eigh");
    const double scale = std::max(1.0, input.max_abs());
    if (!is_hermitian(input, 1e-10 * scale)) {
        throw DomainError("eigh: matrix is not Hermitian");
    }
    const std::size_t n = input.rows();
    ComplexMatrix a = input;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
        a(i, i) = a(i, i).real();
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    double total = 0;
    for (const auto& z : a.entries()) {
        total += std::norm(z);
    }
    const double threshold = 1e-30 * std::max(total, 1e-300);

    for (int sweep = 0; sweep < 100 && off_diagonal_norm_sq(a) > threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) {
                    continue;
                }
                // Phase e^{-i phi} on column q makes the (p,q) entry real and
                // positive; a real Jacobi rotation then annihilates it.
                const Complex phase = std::conj(apq) / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex u_pp = c;
                const Complex u_pq = s;
                const Complex u_qp = -s * phase;
                const Complex u_qq = c * phase;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * u_pp + akq * u_qp;
                    a(k, q) = akp * u_pq + akq * u_qq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
                    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * u_pp + vkq * u_qp;
                    v(k, q) = vkp * u_pq + vkq * u_qq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    HermitianSpectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "tensor_product");
    require_square(b, "tensor_product");
    const std::size_t da = a.rows();
    const std::size_t db = b.rows();
    ComplexMatrix out(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix swap_operator(std::size_t d) {
    ComplexMatrix s(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            s(j * d + i, i * d + j) = 1.0;
        }
    }
    return s;
}

ComplexMatrix swap_conjugate(const ComplexMatrix& w, std::size_t d) {
    if (d == 0 || w.rows() != d * d || w.cols() != d * d) {
        throw DimensionError("swap_conjugate: operator is " + std::to_string(w.rows()) + "x" +
                             std::to_string(w.cols()) + ", expected " + std::to_string(d * d) + "x" +
                             std::to_string(d * d));
    }
    ComplexMatrix out(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t l = 0; l < d; ++l) {
                    out(i * d + j, k * d + l) = w(j * d + i, l * d + k);
                }
            }
        }
    }
    return out;
}

ComplexMatrix symmetrize_bipartite(const ComplexMatrix& w, std::size_t d) {
    ComplexMatrix out = swap_conjugate(w, d);
    out += w;
    out *= 0.5;
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    require_square(a, "singular_values");
    std::vector<double> sv;
    if (is_hermitian(a, 0.0)) {
        for (double ev : eigh(a).eigenvalues) {
            sv.push_back(std::abs(ev));
        }
    } else {
        for (double ev : eigh(a.adjoint() * a).eigenvalues) {
            sv.push_back(std::sqrt(std::max(ev, 0.0)));
        }
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double trace_norm(const ComplexMatrix& a) {
    const auto sv = singular_values(a);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

double operator_norm(const ComplexMatrix& a) {
    const auto sv = singular_values(a);
    return sv.empty() ? 0.0 : sv.front();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_psd(const ComplexMatrix& a) {
    if (!is_hermitian(a, 1e-10 * std::max(1.0, a.max_abs()))) {
        return false;
    }
    const auto spectrum = eigh(a);
    if (spectrum.eigenvalues.empty()) {
        return true;
    }
    const double norm = std::max(std::abs(spectrum.eigenvalues.front()), std::abs(spectrum.eigenvalues.back()));
    return spectrum.eigenvalues.back() >= -1e-8 * std::max(1.0, norm);
}

ComplexMatrix partial_trace_second(const ComplexMatrix& a, std::size_t d1, std::size_t d2) {
    if (a.rows() != d1 * d2 || a.cols() != d1 * d2) {
        throw DimensionError("partial_trace_second: operator is not (d1*d2)-dimensional");
    }
    ComplexMatrix out(d1, d1);
    for (std::size_t i = 0; i < d1; ++i) {
        for (std::size_t j = 0; j < d1; ++j) {
            Complex t = 0;
            for (std::size_t k = 0; k < d2; ++k) {
                t += a(i * d2 + k, j * d2 + k);
            }
            out(i, j) = t;
        }
    }
    return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& a, std::size_t d1, std::size_t d2) {
    if (a.rows() != d1 * d2 || a.cols() != d1 * d2) {
        throw DimensionError("partial_trace_first: operator is not (d1*d2)-dimensional");
    }
    ComplexMatrix out(d2, d2);
    for (std::size_t k = 0; k < d2; ++k) {
        for (std::size_t l = 0; l < d2; ++l) {
            Complex t = 0;
            for (std::size_t i = 0; i < d1; ++i) {
                t += a(i * d2 + k, i * d2 + l);
            }
            out(k, l) = t;
        }
    }
    return out;
}

ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }
ComplexMatrix pauli_y() { return {{0, Complex(0, -1)}, {Complex(0, 1), 0}}; }
ComplexMatrix pauli_z() { return {{1, 0}, {0, -1}}; }

}  // namespace locreal
