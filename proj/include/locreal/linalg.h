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

#ifndef LOCREAL_LINALG_H
#define LOCREAL_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace locreal {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Nested initializer, one list per row.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v| for a (not necessarily normalized) column vector v.
    static ComplexMatrix outer(std::span<const Complex> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    /// Largest absolute entry.
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// max_{ij} |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr[a b] without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues in descending order.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;
    /// Column k is the eigenvector of eigenvalues[k].
    ComplexMatrix eigenvectors;

    ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi. Throws DimensionError for non-square input and
/// DomainError when `a` is not Hermitian within 1e-10 * max(1, max_abs(a)).
HermitianSpectrum eigh(const ComplexMatrix& a);

/// Kronecker product, left factor major. Both factors must be square.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Swap operator S on C^d (x) C^d, S(x (x) y) = y (x) x.
ComplexMatrix swap_operator(std::size_t d);

/// (W + S W S) / 2 for a d^2 x d^2 operator W.
ComplexMatrix symmetrize_bipartite(const ComplexMatrix& w, std::size_t d);

/// S W S, computed by index permutation.
ComplexMatrix swap_conjugate(const ComplexMatrix& w, std::size_t d);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& a);

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);

/// Singular values in descending order. Square input only.
std::vector<double> singular_values(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-10);

/// Hermitian and min eigenvalue >= -1e-8 * max(1, ||a||).
bool is_psd(const ComplexMatrix& a);

/// Partial trace over the second factor of a (d1*d2)-dimensional operator.
ComplexMatrix partial_trace_second(const ComplexMatrix& a, std::size_t d1, std::size_t d2);
/// Partial trace over the first factor.
ComplexMatrix partial_trace_first(const ComplexMatrix& a, std::size_t d1, std::size_t d2);

/// Pauli matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace locreal

#endif
