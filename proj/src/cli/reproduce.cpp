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

#include "reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "mqc/bounds.hpp"
#include "mqc/concurrence.hpp"
#include "mqc/error.hpp"
#include "mqc/oracle.hpp"
#include "mqc/witness.hpp"

namespace mqc::cli {

std::string relation_symbol(Relation r) {
    switch (r) {
        case Relation::Within:
            return "~=";
        case Relation::Below:
            return "<";
        case Relation::AtLeast:
            return ">=";
    }
    return "?";
}

namespace {

constexpr int kGridPoints = 101;
constexpr int kSoundnessSamples = 200;

struct Lines {
    int example;
    std::vector<CheckLine> out;

    void add(std::string quantity, double computed, double expected, double tol, Relation rel = Relation::Within) {
        bool pass = false;
        switch (rel) {
            case Relation::Within:
                pass = std::abs(computed - expected) <= tol;
                break;
            case Relation::Below:
                pass = computed < expected;
                break;
            case Relation::AtLeast:
                pass = computed >= expected - tol;
                break;
        }
        out.push_back({example, std::move(quantity), computed, expected, tol, rel, pass});
    }
};

using PairFormula = std::function<double(int i, int j, double x)>;

/// Largest deviation of every pairwise concurrence from `formula` over a uniform grid on [0, 1].
double pair_grid_error(const PureState &base, const PairFormula &formula) {
    double worst = 0;
    for (int g = 0; g < kGridPoints; ++g) {
        const double x = static_cast<double>(g) / (kGridPoints - 1);
        const auto table = pairwise_table(white_noise_mix(base, x));
        for (const auto &e : table.entries()) {
            worst = std::max(worst, std::abs(e.value - formula(e.i, e.j, x)));
        }
    }
    return worst;
}

/// Largest deviation of the T1 bound from coefficient * C_12^2 over the grid.
double t1_grid_error(const PureState &base, double coefficient) {
    double worst = 0;
    for (int g = 0; g < kGridPoints; ++g) {
        const double x = static_cast<double>(g) / (kGridPoints - 1);
        const auto table = pairwise_table(white_noise_mix(base, x));
        const double c12 = table(1, 2);
        worst = std::max(worst, std::abs(theorem1_bound(table).bound_on_C2 - coefficient * c12 * c12));
    }
    return worst;
}

/// Smallest C^2 - T1 bound over random four-qubit pure states.
double t1_pure_soundness(std::uint64_t seed) {
    double slack = 1e300;
    for (const auto &psi : haar_random_pure({4, seed, kSoundnessSamples})) {
        const double c = pure_concurrence(psi);
        slack = std::min(slack, c * c - theorem1_bound(pairwise_table(psi)).bound_on_C2);
    }
    return slack;
}

double crossing(const PureState &base, const DetectionGoal &goal, BoundSource source) {
    const auto x = detection_threshold(NoisyFamily{base, "x"}, goal, source);
    return x ? *x : std::nan("");
}

std::string seed_note(std::uint64_t seed) {
    return " (" + std::to_string(kSoundnessSamples) + " Haar states, seed " + std::to_string(seed) + ")";
}

void example1(Lines &l, std::uint64_t seed) {
    const PureState w = w_state(4);
    l.add("max |C_ij - max{0,(t-sqrt(1-t^2))/2}| on 101-point grid",
          pair_grid_error(w, [](int, int, double t) { return std::max(0.0, (t - std::sqrt(1 - t * t)) / 2); }), 0,
          1e-9);
    l.add("max |T1 bound on C^2 - (21/4) C_12^2| on grid", t1_grid_error(w, 21.0 / 4.0), 0, 1e-12);
    l.add("C_12 at t = 0.8", pairwise_table(white_noise_mix(w, 0.8))(1, 2), 0.1, 1e-9);
    l.add("comparison coefficient 3 < T1 coefficient 21/4", reference::kComparisonCoefficientExample1, 21.0 / 4.0, 0,
          Relation::Below);
    l.add("min C^2 - T1 bound over pure states" + seed_note(seed), t1_pure_soundness(seed), 0, 1e-10,
          Relation::AtLeast);
}

void example2(Lines &l, std::uint64_t seed) {
    const PureState d = dicke_state(4, 2);
    l.add("max |C_ij - max{0,(5t-3)/6}| on 101-point grid",
          pair_grid_error(d, [](int, int, double t) { return std::max(0.0, (5 * t - 3) / 6); }), 0, 1e-9);
    l.add("max |T1 bound on C^2 - (21/4) C_12^2| on grid", t1_grid_error(d, 21.0 / 4.0), 0, 1e-12);
    l.add("C_12 at t = 0.9", pairwise_table(white_noise_mix(d, 0.9))(1, 2), 0.25, 1e-9);
    const double edge = crossing(d, DetectionGoal::entanglement(), BoundSource::THEOREM1);
    l.add("entanglement detected above t (T1)", edge, 0.6, 1e-4);
    l.add("T1 edge below parametrized-bound edge 0.618034", edge, reference::kDickeEdgeParametrizedBound, 0,
          Relation::Below);
    l.add("parametrized-bound edge below GME-bound edge 0.636364", reference::kDickeEdgeParametrizedBound,
          reference::kDickeEdgeGmeConcurrenceBound, 0, Relation::Below);
    l.add("comparison coefficient 3 < T1 coefficient 21/4", reference::kComparisonCoefficientExample2, 21.0 / 4.0, 0,
          Relation::Below);
    l.add("min C^2 - T1 bound over pure states" + seed_note(seed), t1_pure_soundness(seed), 0, 1e-10,
          Relation::AtLeast);
}

void example3(Lines &l, std::uint64_t seed) {
    const PureState psi = example3_state();
    auto formula = [](int i, int j, double a) {
        const bool zero_pair = (i == 1 && j == 3) || (i == 2 && j == 4);
        return zero_pair ? 0.0 : std::max((a - std::sqrt(1 - a)) / 2, 0.0);
    };
    l.add("max |C_ij - closed form| on 101-point grid (C_13 = C_24 = 0)", pair_grid_error(psi, formula), 0, 1e-9);
    double zero_pairs = 0;
    for (int g = 0; g < kGridPoints; ++g) {
        const auto table = pairwise_table(white_noise_mix(psi, static_cast<double>(g) / (kGridPoints - 1)));
        zero_pairs = std::max({zero_pairs, table(1, 3), table(2, 4)});
    }
    l.add("max C_13, C_24 on grid", zero_pairs, 0, 1e-9);
    l.add("max |T1 bound on C^2 - (7/2) C_12^2| on grid", t1_grid_error(psi, 7.0 / 2.0), 0, 1e-12);
    l.add("C_12 at a = 0.9", pairwise_table(white_noise_mix(psi, 0.9))(1, 2), (0.9 - std::sqrt(0.1)) / 2, 1e-9);
    l.add("comparison coefficient 2 < T1 coefficient 7/2", reference::kComparisonCoefficientExample3, 7.0 / 2.0, 0,
          Relation::Below);
    l.add("min C^2 - T1 bound over pure states" + seed_note(seed), t1_pure_soundness(seed), 0, 1e-10,
          Relation::AtLeast);
}

void example4(Lines &l, std::uint64_t seed) {
    const PureState psi = example4_state();
    auto formula = [](int i, int j, double t) {
        const bool live_pair = (i == 1 && j == 2) || (i == 3 && j == 4);
        return live_pair ? std::max(0.0, (3 * t - 1) / 2) : 0.0;
    };
    l.add("max |C_ij - closed form| on 101-point grid (only C_12, C_34 nonzero)", pair_grid_error(psi, formula), 0,
          1e-9);
    l.add("max |T1 bound on C^2 - (7/4) C_12^2| on grid", t1_grid_error(psi, 7.0 / 4.0), 0, 1e-12);
    l.add("entanglement detected above t (T1)", crossing(psi, DetectionGoal::entanglement(), BoundSource::THEOREM1),
          1.0 / 3.0, 1e-4);
    const double pure_c = pure_concurrence(psi);
    l.add("C(|psi>)", pure_c, std::sqrt(7.0) / 2, 1e-12);
    l.add("T1 bound on C^2 at t = 1 (saturates C^2 = 7/4)", best_bound(white_noise_mix(psi, 1.0)).best().bound_on_C2,
          7.0 / 4.0, 1e-9);
    l.add("comparison coefficient 1 < T1 coefficient 7/4", reference::kComparisonCoefficientExample4, 7.0 / 4.0, 0,
          Relation::Below);
    l.add("min C^2 - T1 bound over pure states" + seed_note(seed), t1_pure_soundness(seed), 0, 1e-10,
          Relation::AtLeast);
}

void example5(Lines &l, std::uint64_t seed) {
    const PureState psi = example4_state();
    l.add("k = 3 threshold for N = 4, d = 2", k_nonsep_threshold(4, 2, 3), std::sqrt(22.0) / 4, 1e-12);
    l.add("3-nonseparability detected above t (T1)",
          crossing(psi, DetectionGoal::k_nonseparable(3), BoundSource::THEOREM1), 0.9243, 1e-4);
    l.add("detected at t = 0.93",
          detect_k_nonseparability(white_noise_mix(psi, 0.93), 3, BoundSource::THEOREM1).detected ? 1 : 0, 1, 0);
    l.add("detected at t = 0.92",
          detect_k_nonseparability(white_noise_mix(psi, 0.92), 3, BoundSource::THEOREM1).detected ? 1 : 0, 0, 0);
    // Fully separable pure states never exceed the k = N threshold.
    double worst = 1e300;
    for (const auto &p : random_product_pure({4, seed, kSoundnessSamples}, {{1}, {2}, {3}, {4}})) {
        worst = std::min(worst, k_nonsep_threshold(4, 2, 4) - pure_concurrence(p));
    }
    l.add("min threshold(4,2,4) - C over product states" + seed_note(seed), worst, 0, 1e-10, Relation::AtLeast);
}

void example6(Lines &l, std::uint64_t seed) {
    double worst = 0;
    for (int n = 2; n <= 8; ++n) {
        worst = std::max(worst, std::abs(ghz_noise_exact_concurrence(n, 1.0) - pure_concurrence(ghz_state(n))));
    }
    l.add("max_n |exact C(p = 1) - C(|GHZ_n>)|, n = 2..8", worst, 0, 1e-10);
    double zero = 0;
    for (int n = 2; n <= 8; ++n) {
        zero = std::max(zero, ghz_noise_exact_concurrence(n, ghz_noise_separability_edge(n)));
    }
    l.add("max_n exact C at p = 1/(2^{n-1}+1)", zero, 0, 1e-12);
    l.add("3-nonseparability detected above p (n = 4, exact)",
          crossing(ghz_state(4), DetectionGoal::k_nonseparable(3), BoundSource::GHZ_EXACT), 0.8991, 1e-4);
    l.add("detected at p = 0.90",
          detect_k_nonseparability(white_noise_mix(ghz_state(4), 0.90), 3, BoundSource::GHZ_EXACT).detected ? 1 : 0, 1,
          0);
    l.add("detected at p = 0.89",
          detect_k_nonseparability(white_noise_mix(ghz_state(4), 0.89), 3, BoundSource::GHZ_EXACT).detected ? 1 : 0, 0,
          0);
    double slack = 1e300;
    for (const auto &p : random_product_pure({4, seed, kSoundnessSamples}, {{1, 2}, {3, 4}})) {
        slack = std::min(slack, k_nonsep_threshold(4, 2, 2) - pure_concurrence(p));
    }
    l.add("min threshold(4,2,2) - C over {12}|{34} product states" + seed_note(seed), slack, 0, 1e-10,
          Relation::AtLeast);
}

}  // namespace

std::vector<CheckLine> reproduce_example(int example, std::uint64_t seed) {
    Lines l{example, {}};
    switch (example) {
        case 1:
            example1(l, seed);
            break;
        case 2:
            example2(l, seed);
            break;
        case 3:
            example3(l, seed);
            break;
        case 4:
            example4(l, seed);
            break;
        case 5:
            example5(l, seed);
            break;
        case 6:
            example6(l, seed);
            break;
        default:
            throw Error(ErrorKind::ParameterOutOfRange, "examples are numbered 1..6, got " + std::to_string(example));
    }
    return l.out;
}

}  // namespace mqc::cli
