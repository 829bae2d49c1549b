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

#include <span>
#include <string>
#include <vector>

#include "mqc/linalg.hpp"

namespace mqc {

/// Normalized state vector over n qubits.
class PureState {
   public:
    /// Validates length 2^n and unit norm within tol.norm.
    static PureState from_amplitudes(std::vector<cplx> amplitudes, const Tolerances &tol = kTolerances);
    /// Rescales to unit norm first.
    static PureState normalized(std::vector<cplx> amplitudes);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    std::size_t dim() const noexcept {
        return amplitudes_.size();
    }
    std::span<const cplx> amplitudes() const noexcept {
        return amplitudes_;
    }
    cplx operator[](std::size_t index) const {
        return amplitudes_[index];
    }

    ComplexMatrix projector() const;

   private:
    PureState(int n_qubits, std::vector<cplx> amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    }

    int n_qubits_ = 0;
    std::vector<cplx> amplitudes_;
};

struct ValidationOptions {
    /// Clamp eigenvalues in [-tol.repair_clamp, 0) to zero and renormalize the trace.
    bool repair = false;
    Tolerances tol = kTolerances;
};

/// Hermitian, unit-trace, positive-semidefinite matrix over n qubits.
class DensityMatrix {
   public:
    /// Throws InvariantViolation naming the failed invariant and its magnitude.
    static DensityMatrix from_matrix(ComplexMatrix m, const ValidationOptions &options = {});
    static DensityMatrix from_pure(const PureState &psi);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }

    /// Reduced state on `keep` (same qubit ordering convention).
    DensityMatrix reduced(SubsetMask keep) const;

   private:
    friend DensityMatrix white_noise_mix(const PureState &psi, double x);

    DensityMatrix(int n_qubits, ComplexMatrix m) : n_qubits_(n_qubits), matrix_(std::move(m)) {
    }

    int n_qubits_ = 0;
    ComplexMatrix matrix_;
};

/// ((1 - x) / 2^N) I + x |base><base| for x in [0, 1].
struct NoisyFamily {
    PureState base;
    std::string parameter_name = "t";

    DensityMatrix at(double x) const;
};

PureState w_state(int n);
PureState dicke_state(int n, int k);
PureState ghz_state(int n);

/// (|0011> + |0101> + |0110> + |1010>) / 2
PureState example3_state();
/// (|0000> + |0011> + |1100> + |1111>) / 2
PureState example4_state();

/// Pure product state |b_1 ... b_n> with qubit 1 leftmost.
PureState basis_state(int n, std::size_t index);

DensityMatrix white_noise_mix(const PureState &psi, double x);
DensityMatrix maximally_mixed(int n);

/// Number of qubits for a power-of-two dimension; throws DimensionMismatch otherwise.
int qubits_for_dimension(std::size_t dim);

}  // namespace mqc
