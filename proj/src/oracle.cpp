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

#include "mqc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail/indexing.hpp"
#include "mqc/error.hpp"

namespace mqc {

namespace {

constexpr int kMaxBruteForceQubits = 10;

void check_sampler_qubits(int n) {
    if (n < 1) {
        throw Error(ErrorKind::TooFewQubits, "sampling needs at least one qubit");
    }
    if (n > kMaxPureQubits) {
        throw Error(ErrorKind::DimensionOverflow,
                    std::to_string(n) + " qubits exceeds the sampler cap of " + std::to_string(kMaxPureQubits));
    }
}

}  // namespace

std::vector<cplx> StateSampler::gaussian_vector(std::size_t dim) {
    std::vector<cplx> v(dim);
    for (auto &z : v) {
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        z = {re, im};
    }
    return v;
}

PureState StateSampler::haar_pure(int n_qubits) {
    check_sampler_qubits(n_qubits);
    return PureState::normalized(gaussian_vector(std::size_t{1} << n_qubits));
}

PureState StateSampler::product_pure(int n_qubits, const std::vector<std::vector<int>> &partition) {
    check_sampler_qubits(n_qubits);
    std::uint64_t seen = 0;
    for (const auto &block : partition) {
        if (block.empty()) {
            throw Error(ErrorKind::InvalidPartition, "empty block");
        }
        for (int q : block) {
            if (q < 1 || q > n_qubits) {
                throw Error(ErrorKind::InvalidPartition, "qubit " + std::to_string(q) + " outside 1.." +
                                                             std::to_string(n_qubits));
            }
            const std::uint64_t bit = std::uint64_t{1} << (q - 1);
            if (seen & bit) {
                throw Error(ErrorKind::InvalidPartition, "qubit " + std::to_string(q) + " appears twice");
            }
            seen |= bit;
        }
    }
    if (seen != (std::uint64_t{1} << n_qubits) - 1) {
        throw Error(ErrorKind::InvalidPartition, "blocks do not cover every qubit");
    }

    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<cplx> amps(dim, 1.0);
    for (const auto &block : partition) {
        const std::vector<int> labels = [&] {
            std::vector<int> sorted = block;
            std::sort(sorted.begin(), sorted.end());
            return sorted;
        }();
        const PureState factor = haar_pure(static_cast<int>(labels.size()));
        const auto scatter = detail::scatter_indices(labels, n_qubits);
        std::size_t block_mask = 0;
        for (std::size_t s : scatter) {
            block_mask |= s;
        }
        // Local index of each full basis index restricted to this block.
        for (std::size_t x = 0; x < dim; ++x) {
            const std::size_t bits = x & block_mask;
            const auto it = std::find(scatter.begin(), scatter.end(), bits);
            amps[x] *= factor[static_cast<std::size_t>(it - scatter.begin())];
        }
    }
    return PureState::normalized(std::move(amps));
}

ComplexMatrix StateSampler::haar_unitary_2x2() {
    // Gram-Schmidt on a complex Gaussian matrix, with the phase fix that makes it Haar.
    std::vector<cplx> a = gaussian_vector(2);
    std::vector<cplx> b = gaussian_vector(2);
    const double na = std::sqrt(std::norm(a[0]) + std::norm(a[1]));
    a[0] /= na;
    a[1] /= na;
    const cplx proj = std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
    b[0] -= proj * a[0];
    b[1] -= proj * a[1];
    const double nb = std::sqrt(std::norm(b[0]) + std::norm(b[1]));
    b[0] /= nb;
    b[1] /= nb;
    return {{a[0], b[0]}, {a[1], b[1]}};
}

std::vector<PureState> haar_random_pure(const SamplerConfig &config) {
    if (config.count < 1) {
        throw Error(ErrorKind::ParameterOutOfRange, "sample count must be positive");
    }
    check_sampler_qubits(config.n_qubits);
    StateSampler sampler(config.seed);
    std::vector<PureState> out;
    out.reserve(static_cast<std::size_t>(config.count));
    for (int i = 0; i < config.count; ++i) {
        out.push_back(sampler.haar_pure(config.n_qubits));
    }
    return out;
}

std::vector<PureState> random_product_pure(const SamplerConfig &config,
                                           const std::vector<std::vector<int>> &partition) {
    if (config.count < 1) {
        throw Error(ErrorKind::ParameterOutOfRange, "sample count must be positive");
    }
    StateSampler sampler(config.seed);
    std::vector<PureState> out;
    out.reserve(static_cast<std::size_t>(config.count));
    for (int i = 0; i < config.count; ++i) {
        out.push_back(sampler.product_pure(config.n_qubits, partition));
    }
    return out;
}

double brute_force_purity_sum(const PureState &psi) {
    const int n = psi.n_qubits();
    if (n > kMaxBruteForceQubits) {
        throw Error(ErrorKind::DimensionOverflow, "brute-force purity sum is limited to " +
                                                      std::to_string(kMaxBruteForceQubits) + " qubits");
    }
    if (n < 2) {
        throw Error(ErrorKind::TooFewQubits, "purity sum needs at least two qubits");
    }
    const ComplexMatrix rho = psi.projector();
    double s = 0;
    for (const SubsetMask &subset : proper_subsets(n)) {
        s += purity(partial_trace(rho, subset));
    }
    return s;
}

PureState apply_local_unitaries(const PureState &psi, const std::vector<ComplexMatrix> &unitaries) {
    const int n = psi.n_qubits();
    if (static_cast<int>(unitaries.size()) != n) {
        throw Error(ErrorKind::DimensionMismatch, "need one unitary per qubit");
    }
    std::vector<cplx> amps(psi.amplitudes().begin(), psi.amplitudes().end());
    for (int q = 1; q <= n; ++q) {
        const ComplexMatrix &u = unitaries[q - 1];
        if (u.dim() != 2) {
            throw Error(ErrorKind::WrongDimension, "local unitaries must be 2x2");
        }
        const std::size_t bit = std::size_t{1} << basis_bit(q, n);
        for (std::size_t x = 0; x < amps.size(); ++x) {
            if (x & bit) {
                continue;
            }
            const cplx a0 = amps[x];
            const cplx a1 = amps[x | bit];
            amps[x] = u(0, 0) * a0 + u(0, 1) * a1;
            amps[x | bit] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
    return PureState::normalized(std::move(amps));
}

DensityMatrix apply_local_unitaries(const DensityMatrix &rho, const std::vector<ComplexMatrix> &unitaries) {
    if (static_cast<int>(unitaries.size()) != rho.n_qubits()) {
        throw Error(ErrorKind::DimensionMismatch, "need one unitary per qubit");
    }
    ComplexMatrix u = unitaries.front();
    for (std::size_t q = 1; q < unitaries.size(); ++q) {
        u = kron(u, unitaries[q]);
    }
    ComplexMatrix out = u * rho.matrix() * u.adjoint();
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix::from_matrix(std::move(out));
}

}  // namespace mqc
