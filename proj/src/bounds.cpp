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

#include "mqc/bounds.hpp"

#include <cmath>
#include <string>

#include "mqc/error.hpp"

namespace mqc {

std::string_view to_string(Theorem t) {
    switch (t) {
        case Theorem::T1:
            return "T1";
        case Theorem::T2:
            return "T2";
        case Theorem::T3:
            return "T3";
        case Theorem::GHZ_EXACT:
            return "GHZ_EXACT";
    }
    return "?";
}

bool theorem_applies(Theorem t, int n) {
    switch (t) {
        case Theorem::T1:
            return n == 4;
        case Theorem::T2:
            return n >= 5;
        case Theorem::T3:
            return n >= 6 && n % 2 == 0;
        case Theorem::GHZ_EXACT:
            return n >= 2;
    }
    return false;
}

double theorem_coefficient(Theorem t, int n) {
    if (t == Theorem::GHZ_EXACT || !theorem_applies(t, n)) {
        throw Error(ErrorKind::WrongQubitCount,
                    std::string(to_string(t)) + " does not apply to " + std::to_string(n) + " qubits");
    }
    switch (t) {
        case Theorem::T1:
            return 7.0 / 8.0;
        case Theorem::T2:
            return n / std::exp2(n - 2);
        case Theorem::T3:
            return (n - 2) / std::exp2(n - 3);
        default:
            break;
    }
    return 0;
}

BoundReport theorem_bound(Theorem t, const PairwiseConcurrenceTable &table) {
    BoundReport r;
    r.theorem = t;
    r.n_qubits = table.n_qubits();
    r.coefficient = theorem_coefficient(t, r.n_qubits);
    r.pair_sum = table.squared_sum();
    r.bound_on_C2 = r.coefficient * r.pair_sum;
    r.bound_on_C = std::sqrt(r.bound_on_C2);
    return r;
}

BoundReport theorem1_bound(const PairwiseConcurrenceTable &table) {
    return theorem_bound(Theorem::T1, table);
}

BoundReport theorem2_bound(const PairwiseConcurrenceTable &table) {
    return theorem_bound(Theorem::T2, table);
}

BoundReport theorem3_bound(const PairwiseConcurrenceTable &table) {
    return theorem_bound(Theorem::T3, table);
}

std::optional<BoundReport> BoundSet::find(Theorem t) const {
    for (const auto &r : reports) {
        if (r.theorem == t) {
            return r;
        }
    }
    return std::nullopt;
}

BoundSet all_bounds(const PairwiseConcurrenceTable &table) {
    const int n = table.n_qubits();
    if (n < 4) {
        throw Error(ErrorKind::WrongQubitCount, "concurrence bounds need N >= 4, got " + std::to_string(n));
    }
    BoundSet set{table, {}, 0, false};
    for (Theorem t : {Theorem::T1, Theorem::T2, Theorem::T3}) {
        if (theorem_applies(t, n)) {
            set.reports.push_back(theorem_bound(t, table));
        }
    }
    for (std::size_t k = 1; k < set.reports.size(); ++k) {
        if (set.reports[k].bound_on_C2 > set.reports[set.best_index].bound_on_C2) {
            set.best_index = k;
        }
    }
    if (theorem_applies(Theorem::T2, n) && theorem_applies(Theorem::T3, n)) {
        set.t3_dominates_t2 = theorem_coefficient(Theorem::T3, n) > theorem_coefficient(Theorem::T2, n);
        if (set.t3_dominates_t2) {
            // Ties (all-zero table) still name the stronger theorem.
            set.best_index = set.reports.size() - 1;
        }
    }
    return set;
}

BoundSet best_bound(const DensityMatrix &rho) {
    if (rho.n_qubits() < 4) {
        throw Error(ErrorKind::WrongQubitCount, "concurrence bounds need N >= 4, got " + std::to_string(rho.n_qubits()));
    }
    return all_bounds(pairwise_table(rho));
}

double ghz_noise_separability_edge(int n) {
    if (n < 2 || n > 62) {
        throw Error(ErrorKind::ParameterOutOfRange, "GHZ family over " + std::to_string(n) + " qubits");
    }
    return 1.0 / (std::exp2(n - 1) + 1.0);
}

double ghz_noise_exact_concurrence(int n, double p) {
    const double edge = ghz_noise_separability_edge(n);
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::ParameterOutOfRange, "mixing parameter " + std::to_string(p) + " outside [0, 1]");
    }
    if (p <= edge) {
        return 0.0;
    }
    const double half = std::exp2(n - 1);
    const double pure = std::sqrt((half - 1.0) / std::exp2(n - 2));
    return pure * ((half + 1.0) * p - 1.0) / half;
}

BoundReport ghz_noise_exact_report(int n, double p) {
    BoundReport r;
    r.theorem = Theorem::GHZ_EXACT;
    r.n_qubits = n;
    r.bound_on_C = ghz_noise_exact_concurrence(n, p);
    r.bound_on_C2 = r.bound_on_C * r.bound_on_C;
    return r;
}

}  // namespace mqc
