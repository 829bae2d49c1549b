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

#include "mqc/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "detail/indexing.hpp"
#include "mqc/error.hpp"

namespace mqc {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                                      std::to_string(entries_.size()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix rows must all have length " + std::to_string(dim_));
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> ket) {
    ComplexMatrix m(ket.size());
    for (std::size_t i = 0; i < ket.size(); ++i) {
        for (std::size_t j = 0; j < ket.size(); ++j) {
            m(i, j) = ket[i] * std::conj(ket[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r = *this;
    for (auto &z : r.entries_) {
        z = std::conj(z);
    }
    return r;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::hermiticity_error() const {
    double worst = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix sum of different dimensions");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix difference of different dimensions");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix product of different dimensions");
    }
    const std::size_t n = a.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                r(i, j) += aik * b(k, j);
            }
        }
    }
    return r;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "comparing matrices of different dimensions");
    }
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// SubsetMask

SubsetMask::SubsetMask(std::uint64_t bits_, int n_qubits_) : bits(bits_), n_qubits(n_qubits_) {
    if (n_qubits < 1 || n_qubits > 63) {
        throw Error(ErrorKind::ParameterOutOfRange, "subset over " + std::to_string(n_qubits) + " qubits");
    }
    if (bits >> n_qubits) {
        throw Error(ErrorKind::ParameterOutOfRange,
                    "mask " + std::to_string(bits) + " selects qubits beyond " + std::to_string(n_qubits));
    }
}

SubsetMask SubsetMask::of(std::initializer_list<int> qubits, int n_qubits) {
    return of(std::span<const int>(qubits.begin(), qubits.size()), n_qubits);
}

SubsetMask SubsetMask::of(std::span<const int> qubits, int n_qubits) {
    std::uint64_t bits = 0;
    for (int q : qubits) {
        if (q < 1 || q > n_qubits) {
            throw Error(ErrorKind::ParameterOutOfRange,
                        "qubit label " + std::to_string(q) + " outside 1.." + std::to_string(n_qubits));
        }
        bits |= std::uint64_t{1} << (q - 1);
    }
    return SubsetMask(bits, n_qubits);
}

int SubsetMask::size() const noexcept {
    return std::popcount(bits);
}

bool SubsetMask::contains(int qubit) const noexcept {
    return qubit >= 1 && qubit <= n_qubits && ((bits >> (qubit - 1)) & 1U);
}

bool SubsetMask::proper() const noexcept {
    return bits != 0 && bits != (std::uint64_t{1} << n_qubits) - 1;
}

SubsetMask SubsetMask::complement() const noexcept {
    SubsetMask c;
    c.n_qubits = n_qubits;
    c.bits = ~bits & ((std::uint64_t{1} << n_qubits) - 1);
    return c;
}

std::vector<int> SubsetMask::qubits() const {
    std::vector<int> out;
    for (int q = 1; q <= n_qubits; ++q) {
        if (contains(q)) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<SubsetMask> proper_subsets(int n_qubits) {
    if (n_qubits < 2 || n_qubits > 30) {
        throw Error(ErrorKind::ParameterOutOfRange, "cannot enumerate subsets of " + std::to_string(n_qubits) + " qubits");
    }
    std::vector<SubsetMask> out;
    const std::uint64_t full = (std::uint64_t{1} << n_qubits) - 1;
    out.reserve(full - 1);
    for (std::uint64_t b = 1; b < full; ++b) {
        out.emplace_back(b, n_qubits);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eigensolver: cyclic complex Jacobi.

namespace {

double off_diagonal_norm2(const ComplexMatrix &a) {
    double s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return s;
}

double frobenius_norm2(const ComplexMatrix &a) {
    double s = 0;
    for (const auto &z : a.entries()) {
        s += std::norm(z);
    }
    return s;
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix &m, const Tolerances &tol) {
    const std::size_t n = m.dim();
    if (n == 0) {
        throw Error(ErrorKind::WrongDimension, "empty matrix");
    }
    if (const double err = m.hermiticity_error(); err > tol.hermitian) {
        throw Error(ErrorKind::NotHermitian, "max |m - m^dagger| = " + std::to_string(err));
    }

    // Work on the exactly Hermitian part.
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale2 = frobenius_norm2(a);
    const double eps = std::numeric_limits<double>::epsilon();
    constexpr int kMaxSweeps = 64;
    bool converged = scale2 == 0.0;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (off_diagonal_norm2(a) <= eps * eps * scale2) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx g = a(p, q);
                const double ag = std::abs(g);
                if (ag == 0.0) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Negligible pivot relative to both diagonal entries.
                if (sweep > 3 && ag < eps * 1e-2 * std::min(std::abs(app), std::abs(aqq))) {
                    a(p, q) = 0;
                    a(q, p) = 0;
                    continue;
                }
                const cplx phase = g / ag;
                const double theta = (aqq - app) / (2.0 * ag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                const cplx upp = c;
                const cplx upq = s;
                const cplx uqp = -s * std::conj(phase);
                const cplx uqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
            }
        }
    }
    if (!converged && off_diagonal_norm2(a) > eps * eps * scale2 * 1e4) {
        throw Error(ErrorKind::ConvergenceFailure,
                    "Jacobi sweeps exhausted on " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    Eigensystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]).real();
        for (std::size_t k = 0; k < n; ++k) {
            out.vectors(k, col) = v(k, order[col]);
        }
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m, const Tolerances &tol) {
    const Eigensystem es = hermitian_eigensystem(m, tol);
    const std::size_t n = m.dim();
    if (es.values.back() < -tol.psd) {
        throw Error(ErrorKind::NotPSD, "smallest eigenvalue " + std::to_string(es.values.back()));
    }
    ComplexMatrix r(n);
    for (std::size_t col = 0; col < n; ++col) {
        const double root = std::sqrt(std::max(es.values[col], 0.0));
        if (root == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vi = es.vectors(i, col) * root;
            for (std::size_t j = 0; j < n; ++j) {
                r(i, j) += vi * std::conj(es.vectors(j, col));
            }
        }
    }
    return r;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t max_dim) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    if (na != 0 && nb > max_dim / na) {
        throw Error(ErrorKind::DimensionOverflow, "kron dimension " + std::to_string(na) + "*" + std::to_string(nb) +
                                                      " exceeds cap " + std::to_string(max_dim));
    }
    ComplexMatrix r(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    r(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return r;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, SubsetMask keep) {
    if (keep.empty()) {
        throw Error(ErrorKind::EmptySubset, "partial trace must keep at least one qubit");
    }
    const int n = keep.n_qubits;
    if (rho.dim() != (std::size_t{1} << n)) {
        throw Error(ErrorKind::DimensionMismatch, "matrix of dimension " + std::to_string(rho.dim()) +
                                                      " is not over " + std::to_string(n) + " qubits");
    }
    const std::vector<int> kept = keep.qubits();
    const std::vector<int> traced = keep.complement().qubits();
    const std::size_t dk = std::size_t{1} << kept.size();
    const std::size_t dt = std::size_t{1} << traced.size();

    const auto kept_idx = detail::scatter_indices(kept, n);
    const auto traced_idx = detail::scatter_indices(traced, n);

    ComplexMatrix out(dk);
    for (std::size_t a = 0; a < dk; ++a) {
        for (std::size_t b = 0; b < dk; ++b) {
            cplx s = 0;
            for (std::size_t t = 0; t < dt; ++t) {
                s += rho(kept_idx[a] | traced_idx[t], kept_idx[b] | traced_idx[t]);
            }
            out(a, b) = s;
        }
    }
    return out;
}

double purity(const ComplexMatrix &rho) {
    double s = 0;
    const std::size_t n = rho.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            s += (rho(i, j) * rho(j, i)).real();
        }
    }
    return s;
}

namespace pauli {

ComplexMatrix x() {
    return {{0, 1}, {1, 0}};
}

ComplexMatrix y() {
    return {{0, cplx(0, -1)}, {cplx(0, 1), 0}};
}

ComplexMatrix z() {
    return {{1, 0}, {0, -1}};
}

}  // namespace pauli

}  // namespace mqc
