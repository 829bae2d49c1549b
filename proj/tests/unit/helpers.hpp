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

#include "mqc/linalg.hpp"
#include "mqc/oracle.hpp"
#include "mqc/states.hpp"

namespace mqc::testing {

inline ComplexMatrix random_matrix(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = cplx(g(rng), g(rng));
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    const ComplexMatrix a = random_matrix(dim, rng);
    return 0.5 * (a + a.adjoint());
}

/// A^dagger A / Tr, a full-rank random density matrix.
inline DensityMatrix random_density(int n_qubits, std::mt19937_64 &rng) {
    const ComplexMatrix a = random_matrix(std::size_t{1} << n_qubits, rng);
    ComplexMatrix m = a.adjoint() * a;
    m *= 1.0 / m.trace().real();
    return DensityMatrix::from_matrix(m);
}

inline std::vector<ComplexMatrix> random_local_unitaries(int n_qubits, StateSampler &sampler) {
    std::vector<ComplexMatrix> us;
    for (int q = 0; q < n_qubits; ++q) {
        us.push_back(sampler.haar_unitary_2x2());
    }
    return us;
}

}  // namespace mqc::testing
