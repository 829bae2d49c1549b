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
#include <vector>

#include "mqc/linalg.hpp"
#include "mqc/states.hpp"

namespace mqc {

/// Two-qubit concurrences C_ij of every unordered pair of qubits.
class PairwiseConcurrenceTable {
   public:
    struct Entry {
        int i;  // 1-based, i < j
        int j;
        double value;
    };

    explicit PairwiseConcurrenceTable(int n_qubits);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    /// Symmetric lookup with 1-based labels, i != j.
    double operator()(int i, int j) const;
    void set(int i, int j, double value);

    /// Pairs in lexicographic order (1,2), (1,3), ..., (n-1,n).
    const std::vector<Entry> &entries() const noexcept {
        return entries_;
    }
    /// Sum over i < j of C_ij^2.
    double squared_sum() const;

   private:
    std::size_t slot(int i, int j) const;

    int n_qubits_;
    std::vector<Entry> entries_;
};

/// Squared bipartite concurrences C^2_{S|S'} of a pure state for every
/// nonempty proper subset S, in increasing bitmask order.
struct CutConcurrenceProfile {
    int n_qubits = 0;
    std::vector<SubsetMask> subsets;
    std::vector<double> values;

    /// Sum of C^2_{S|S'} over all |S| = size.
    double size_sum(int size) const;
};

/// Tr rho_S^2 for the reduced state of a pure state, formed from the state
/// vector on the smaller side of the cut.
double subset_purity(const PureState &psi, SubsetMask subset);

/// Sum of Tr rho_S^2 over all 2^N - 2 nonempty proper subsets.
double purity_sum(const PureState &psi);

/// Reduced density matrix of a pure state, computed without forming |psi><psi|.
ComplexMatrix reduced_density(const PureState &psi, SubsetMask keep);

/// 2^{1-N/2} sqrt(2^N - 2 - sum_S Tr rho_S^2).
double pure_concurrence(const PureState &psi);

/// 2 (1 - Tr rho_S^2).
double cut_concurrence_squared(const PureState &psi, SubsetMask cut);

CutConcurrenceProfile cut_profile(const PureState &psi);

/// Wootters concurrence of a two-qubit density matrix.
double wootters_concurrence(const DensityMatrix &rho);
double wootters_concurrence(const ComplexMatrix &rho);

PairwiseConcurrenceTable pairwise_table(const DensityMatrix &rho);
PairwiseConcurrenceTable pairwise_table(const PureState &psi);

/// <psi| sigma_y^{(x)n} |psi^*>.
std::complex<double> h_invariant(const PureState &psi);

}  // namespace mqc
