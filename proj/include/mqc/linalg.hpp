// Copyright 2026 The mqc Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "mqc/tolerances.hpp"

namespace mqc {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix outer(std::span<const cplx> ket);  // |ket><ket|

    std::size_t dim() const noexcept {
        return dim_;
    }
    std::span<const cplx> entries() const noexcept {
        return entries_;
    }

    cplx &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const cplx &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    cplx trace() const;

    /// Largest |m_ij - m_ji^*|.
    double hermiticity_error() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) {
        return a *= s;
    }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    bool operator==(const ComplexMatrix &) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// A subset of the qubits {1..n}. Bit (q-1) selects qubit q.
struct SubsetMask {
    std::uint64_t bits = 0;
    int n_qubits = 0;

    SubsetMask() = default;
    SubsetMask(std::uint64_t bits, int n_qubits);

    /// Mask from 1-based qubit labels.
    static SubsetMask of(std::initializer_list<int> qubits, int n_qubits);
    static SubsetMask of(std::span<const int> qubits, int n_qubits);

    int size() const noexcept;
    bool contains(int qubit) const noexcept;
    bool empty() const noexcept {
        return bits == 0;
    }
    bool proper() const noexcept;
    SubsetMask complement() const noexcept;
    /// 1-based labels in increasing order.
    std::vector<int> qubits() const;

    bool operator==(const SubsetMask &) const = default;
};

/// Every nonempty proper subset of n qubits in increasing bitmask order.
std::vector<SubsetMask> proper_subsets(int n_qubits);

/// Position of qubit q (1-based) in a computational-basis index: qubit 1 is the
/// most significant bit.
constexpr int basis_bit(int qubit, int n_qubits) noexcept {
    return n_qubits - qubit;
}

struct Eigensystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column j pairs with values[j]
};

Eigensystem hermitian_eigensystem(const ComplexMatrix &m, const Tolerances &tol = kTolerances);

ComplexMatrix psd_sqrt(const ComplexMatrix &m, const Tolerances &tol = kTolerances);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t max_dim = kMaxDenseDim);

/// Reduced matrix on the qubits in `keep`, ordered by increasing label.
ComplexMatrix partial_trace(const ComplexMatrix &rho, SubsetMask keep);

/// Tr(rho^2), using the entries as given (no hermiticity assumption beyond squareness).
double purity(const ComplexMatrix &rho);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace mqc
