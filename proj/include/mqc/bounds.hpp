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

#include <optional>
#include <string_view>
#include <vector>

#include "mqc/concurrence.hpp"
#include "mqc/states.hpp"

namespace mqc {

enum class Theorem {
    T1,         // N = 4:        C^2 >= 7/8 sum C_ij^2
    T2,         // N >= 5:       C^2 >= N / 2^{N-2} sum C_ij^2
    T3,         // even N >= 6:  C^2 >= (N-2) / 2^{N-3} sum C_ij^2
    GHZ_EXACT,  // exact value on the GHZ + white-noise family
};

std::string_view to_string(Theorem t);

struct BoundReport {
    Theorem theorem = Theorem::T1;
    int n_qubits = 0;
    double pair_sum = 0;     // sum_{i<j} C_ij^2
    double coefficient = 0;  // bound_on_C2 / pair_sum for T1..T3
    double bound_on_C2 = 0;
    double bound_on_C = 0;
};

/// Whether the pairwise-concurrence theorem applies to n qubits.
bool theorem_applies(Theorem t, int n_qubits);

/// 7/8, N/2^{N-2} or (N-2)/2^{N-3}; throws WrongQubitCount when not applicable.
double theorem_coefficient(Theorem t, int n_qubits);

BoundReport theorem1_bound(const PairwiseConcurrenceTable &table);
BoundReport theorem2_bound(const PairwiseConcurrenceTable &table);
BoundReport theorem3_bound(const PairwiseConcurrenceTable &table);
BoundReport theorem_bound(Theorem t, const PairwiseConcurrenceTable &table);

/// Every applicable theorem evaluated on one pairwise table.
struct BoundSet {
    PairwiseConcurrenceTable table;
    std::vector<BoundReport> reports;  // in theorem order
    std::size_t best_index = 0;
    /// Set when both T2 and T3 apply and T3 has the larger coefficient.
    bool t3_dominates_t2 = false;

    const BoundReport &best() const {
        return reports.at(best_index);
    }
    std::optional<BoundReport> find(Theorem t) const;
};

BoundSet all_bounds(const PairwiseConcurrenceTable &table);
/// Requires N >= 4.
BoundSet best_bound(const DensityMatrix &rho);

/// Exact concurrence of ((1-p)/2^n) I + p |GHZ_n><GHZ_n|: zero up to
/// p = 1/(2^{n-1}+1), affine in p above it.
double ghz_noise_exact_concurrence(int n, double p);
BoundReport ghz_noise_exact_report(int n, double p);

/// Mixing parameter at which the GHZ + noise family becomes entangled.
double ghz_noise_separability_edge(int n);

/// Bounds quoted for comparison in the worked four-qubit examples. Their
/// derivations live in other work; they are kept as documentation values.
namespace reference {
/// Comparison bound coefficients on C_12^2 for Examples 1-4.
inline constexpr double kComparisonCoefficientExample1 = 3.0;
inline constexpr double kComparisonCoefficientExample2 = 3.0;
inline constexpr double kComparisonCoefficientExample3 = 2.0;
inline constexpr double kComparisonCoefficientExample4 = 1.0;
/// Entanglement detection edges for the Dicke + noise family from those bounds.
inline constexpr double kDickeEdgeParametrizedBound = 0.618034;
inline constexpr double kDickeEdgeGmeConcurrenceBound = 0.636364;
}  // namespace reference

}  // namespace mqc
