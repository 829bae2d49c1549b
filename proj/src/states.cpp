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

#include "mqc/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mqc/error.hpp"

namespace mqc {

int qubits_for_dimension(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw Error(ErrorKind::DimensionMismatch, "dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
    }
    return std::countr_zero(dim);
}

namespace {

double norm2(std::span<const cplx> v) {
    double s = 0;
    for (const auto &z : v) {
        s += std::norm(z);
    }
    return s;
}

void check_qubits(int n, int minimum) {
    if (n < minimum) {
        throw Error(ErrorKind::TooFewQubits, "need at least " + std::to_string(minimum) + " qubits, got " +
                                                 std::to_string(n));
    }
    if (n > kMaxPureQubits) {
        throw Error(ErrorKind::DimensionOverflow, std::to_string(n) + " qubits exceeds the state-vector cap of " +
                                                      std::to_string(kMaxPureQubits));
    }
}

}  // namespace

PureState PureState::from_amplitudes(std::vector<cplx> amplitudes, const Tolerances &tol) {
    const int n = qubits_for_dimension(amplitudes.size());
    if (n > kMaxPureQubits) {
        throw Error(ErrorKind::DimensionOverflow, std::to_string(n) + " qubits exceeds the state-vector cap");
    }
    const double norm = std::sqrt(norm2(amplitudes));
    if (std::abs(norm - 1.0) > tol.norm) {
        throw Error(ErrorKind::InvariantViolation, "unit norm: ||psi|| = " + std::to_string(norm));
    }
    return PureState(n, std::move(amplitudes));
}

PureState PureState::normalized(std::vector<cplx> amplitudes) {
    const double norm = std::sqrt(norm2(amplitudes));
    if (norm == 0.0 || !std::isfinite(norm)) {
        throw Error(ErrorKind::InvariantViolation, "cannot normalize a zero or non-finite vector");
    }
    for (auto &z : amplitudes) {
        z /= norm;
    }
    return from_amplitudes(std::move(amplitudes));
}

ComplexMatrix PureState::projector() const {
    if (dim() > kMaxDenseDim) {
        throw Error(ErrorKind::DimensionOverflow, "projector of dimension " + std::to_string(dim()));
    }
    return ComplexMatrix::outer(amplitudes_);
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, const ValidationOptions &options) {
    const auto &tol = options.tol;
    const int n = qubits_for_dimension(m.dim());
    if (m.dim() > kMaxDenseDim) {
        throw Error(ErrorKind::DimensionOverflow, "density matrix of dimension " + std::to_string(m.dim()));
    }
    for (const auto &z : m.entries()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorKind::InvariantViolation, "finite entries: matrix contains NaN or infinity");
        }
    }
    if (const double herm = m.hermiticity_error(); herm > tol.hermitian) {
        throw Error(ErrorKind::InvariantViolation, "hermitian: max |rho - rho^dagger| = " + std::to_string(herm) +
                                                       " exceeds " + std::to_string(tol.hermitian));
    }
    Eigensystem es = hermitian_eigensystem(m, tol);
    const double smallest = es.values.back();
    if (options.repair && smallest < -tol.psd) {
        if (smallest < -tol.repair_clamp) {
            throw Error(ErrorKind::InvariantViolation, "positive semidefinite: eigenvalue " + std::to_string(smallest) +
                                                           " is below the repair floor " +
                                                           std::to_string(-tol.repair_clamp));
        }
        double total = 0;
        for (auto &v : es.values) {
            v = std::max(v, 0.0);
            total += v;
        }
        ComplexMatrix repaired(m.dim());
        for (std::size_t col = 0; col < m.dim(); ++col) {
            const double w = es.values[col] / total;
            for (std::size_t i = 0; i < m.dim(); ++i) {
                for (std::size_t j = 0; j < m.dim(); ++j) {
                    repaired(i, j) += w * es.vectors(i, col) * std::conj(es.vectors(j, col));
                }
            }
        }
        return DensityMatrix(n, std::move(repaired));
    }
    if (smallest < -tol.psd) {
        throw Error(ErrorKind::InvariantViolation, "positive semidefinite: smallest eigenvalue " +
                                                       std::to_string(smallest) + " below " +
                                                       std::to_string(-tol.psd));
    }
    const cplx tr = m.trace();
    if (std::abs(tr - 1.0) > tol.trace) {
        if (options.repair) {
            m *= 1.0 / tr.real();
        } else {
            throw Error(ErrorKind::InvariantViolation, "unit trace: |Tr rho - 1| = " + std::to_string(std::abs(tr - 1.0)));
        }
    }
    return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    return DensityMatrix(psi.n_qubits(), psi.projector());
}

DensityMatrix DensityMatrix::reduced(SubsetMask keep) const {
    if (keep.n_qubits != n_qubits_) {
        throw Error(ErrorKind::DimensionMismatch, "subset over " + std::to_string(keep.n_qubits) +
                                                      " qubits applied to a " + std::to_string(n_qubits_) +
                                                      "-qubit state");
    }
    return DensityMatrix(keep.size(), partial_trace(matrix_, keep));
}

DensityMatrix NoisyFamily::at(double x) const {
    return white_noise_mix(base, x);
}

PureState w_state(int n) {
    check_qubits(n, 2);
    return dicke_state(n, 1);
}

PureState dicke_state(int n, int k) {
    check_qubits(n, 2);
    if (k < 1 || k > n - 1) {
        throw Error(ErrorKind::ExcitationOutOfRange,
                    "excitation number " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
    }
    const std::size_t dim = std::size_t{1} << n;
    std::size_t count = 0;
    for (std::size_t x = 0; x < dim; ++x) {
        count += std::popcount(x) == k;
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(count));
    std::vector<cplx> a(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        if (std::popcount(x) == k) {
            a[x] = amp;
        }
    }
    return PureState::from_amplitudes(std::move(a));
}

PureState ghz_state(int n) {
    check_qubits(n, 2);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cplx> a(dim);
    a.front() = M_SQRT1_2;
    a.back() = M_SQRT1_2;
    return PureState::from_amplitudes(std::move(a));
}

PureState example3_state() {
    std::vector<cplx> a(16);
    for (std::size_t x : {0b0011, 0b0101, 0b0110, 0b1010}) {
        a[x] = 0.5;
    }
    return PureState::from_amplitudes(std::move(a));
}

PureState example4_state() {
    std::vector<cplx> a(16);
    for (std::size_t x : {0b0000, 0b0011, 0b1100, 0b1111}) {
        a[x] = 0.5;
    }
    return PureState::from_amplitudes(std::move(a));
}

PureState basis_state(int n, std::size_t index) {
    check_qubits(n, 1);
    const std::size_t dim = std::size_t{1} << n;
    if (index >= dim) {
        throw Error(ErrorKind::ParameterOutOfRange, "basis index " + std::to_string(index));
    }
    std::vector<cplx> a(dim);
    a[index] = 1.0;
    return PureState::from_amplitudes(std::move(a));
}

DensityMatrix white_noise_mix(const PureState &psi, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorKind::ParameterOutOfRange, "mixing parameter " + std::to_string(x) + " outside [0, 1]");
    }
    ComplexMatrix m = psi.projector();
    m *= x;
    const double noise = (1.0 - x) / static_cast<double>(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        m(i, i) += noise;
    }
    // Valid by construction: a convex combination of two density matrices.
    return DensityMatrix(psi.n_qubits(), std::move(m));
}

DensityMatrix maximally_mixed(int n) {
    return white_noise_mix(basis_state(n, 0), 0.0);
}

}  // namespace mqc
