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

#include <cstdint>
#include <random>
#include <vector>

#include "mqc/linalg.hpp"
#include "mqc/states.hpp"

namespace mqc {

struct SamplerConfig {
    int n_qubits = 2;
    std::uint64_t seed = 0;
    int count = 1;
};

/// Seeded source of random states. Not safe for concurrent use; create one per worker.
class StateSampler {
   public:
    explicit StateSampler(std::uint64_t seed) : engine_(seed) {
    }

    /// Haar-random pure state (normalized complex Gaussian vector).
    PureState haar_pure(int n_qubits);

    /// Tensor product of independent Haar-random factors, one per block of
    /// 1-based qubit labels. Blocks must cover 1..n disjointly.
    PureState product_pure(int n_qubits, const std::vector<std::vector<int>> &partition);

    /// Haar-random 2x2 unitary.
    ComplexMatrix haar_unitary_2x2();

   private:
    std::vector<cplx> gaussian_vector(std::size_t dim);

    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

std::vector<PureState> haar_random_pure(const SamplerConfig &config);
std::vector<PureState> random_product_pure(const SamplerConfig &config,
                                           const std::vector<std::vector<int>> &partition);

/// Sum of Tr rho_S^2 over all nonempty proper subsets, each reduced state
/// formed by a dense partial trace of |psi><psi|.
double brute_force_purity_sum(const PureState &psi);

/// (U_1 (x) ... (x) U_n) |psi>, one 2x2 unitary per qubit (qubit 1 first).
PureState apply_local_unitaries(const PureState &psi, const std::vector<ComplexMatrix> &unitaries);

/// U rho U^dagger with U = U_1 (x) ... (x) U_n.
DensityMatrix apply_local_unitaries(const DensityMatrix &rho, const std::vector<ComplexMatrix> &unitaries);

}  // namespace mqc
