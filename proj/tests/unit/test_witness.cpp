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

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "helpers.hpp"
#include "mqc/error.hpp"
#include "mqc/oracle.hpp"
#include "mqc/witness.hpp"

namespace mqc {
namespace {

ErrorKind kind_of(const auto &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no mqc::Error thrown";
    return ErrorKind::ParseError;
}

// Biseparable pure states maximize C when the reduced purities are smallest:
// a subset S of size s has purity at least d^{-min(s, N-s)}, except the one
// cut that matches the bipartition, which contributes purity 1 twice.
double biseparable_threshold_by_enumeration(int n, int d) {
    double radicand = std::exp2(n) - 4 + 2.0 / d;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        const int s = std::popcount(mask);
        radicand -= std::pow(d, -std::min(s, n - s));
    }
    return std::exp2(1 - n / 2.0) * std::sqrt(std::max(radicand, 0.0));
}

TEST(Binomial, ExactValues) {
    EXPECT_EQ(binomial(4, 2), 6U);
    EXPECT_EQ(binomial(20, 10), 184756U);
    EXPECT_EQ(binomial(62, 31), 465428353255261088ULL);
    EXPECT_EQ(binomial(5, 0), 1U);
    EXPECT_THROW(binomial(5, 6), Error);
}

TEST(Threshold, ReferencePoints) {
    EXPECT_NEAR(k_nonsep_threshold(4, 2, 3), std::sqrt(22.0) / 4, 1e-12);
    EXPECT_NEAR(k_nonsep_threshold(2, 2, 2), 0.0, 1e-12);
    EXPECT_NEAR(k_nonsep_threshold(3, 2, 2), 1.0, 1e-12);
    EXPECT_GT(pure_concurrence(ghz_state(3)), k_nonsep_threshold(3, 2, 2));
}

TEST(Threshold, Errors) {
    EXPECT_EQ(kind_of([] { k_nonsep_threshold(4, 2, 1); }), ErrorKind::ParameterOutOfRange);
    EXPECT_EQ(kind_of([] { k_nonsep_threshold(4, 2, 5); }), ErrorKind::ParameterOutOfRange);
    EXPECT_EQ(kind_of([] { k_nonsep_threshold(4, 1, 2); }), ErrorKind::ParameterOutOfRange);
    EXPECT_EQ(kind_of([] { k_nonsep_threshold(1, 2, 2); }), ErrorKind::ParameterOutOfRange);
    EXPECT_EQ(kind_of([] { k_nonsep_threshold(4, 2, 3, 2); }), ErrorKind::ParameterOutOfRange);
}

TEST(Threshold, NonincreasingInK) {
    for (int n = 2; n <= 8; ++n) {
        for (int d = 2; d <= 4; ++d) {
            double prev = k_nonsep_threshold(n, d, 2);
            for (int k = 3; k <= n; ++k) {
                const double cur = k_nonsep_threshold(n, d, k);
                EXPECT_LE(cur, prev + 1e-15) << n << ' ' << d << ' ' << k;
                prev = cur;
            }
        }
    }
}

TEST(Threshold, BiseparableSpecialCase) {
    for (int n = 2; n <= 12; ++n) {
        for (int d = 2; d <= 5; ++d) {
            EXPECT_NEAR(k_nonsep_threshold(n, d, 2), biseparable_threshold_by_enumeration(n, d), 1e-12);
        }
    }
}

TEST(Threshold, BlockSizeTightensBound) {
    // Single-site blocks are the worst case; larger blocks give a smaller threshold.
    EXPECT_LT(k_nonsep_threshold(6, 2, 2, 3), k_nonsep_threshold(6, 2, 2, 1));
    EXPECT_LT(k_nonsep_threshold(6, 3, 2, 2), k_nonsep_threshold(6, 3, 2));
    EXPECT_DOUBLE_EQ(k_nonsep_threshold(6, 2, 2, 1), k_nonsep_threshold(6, 2, 2));
}

TEST(Threshold, SoundOnSampledKSeparableStates) {
    StateSampler sampler(61);
    for (int rep = 0; rep < 500; ++rep) {
        const PureState p3 = sampler.product_pure(3, {{1}, {2}, {3}});
        EXPECT_LE(pure_concurrence(p3), k_nonsep_threshold(3, 2, 3) + 1e-10);
    }
    for (int rep = 0; rep < 200; ++rep) {
        const PureState p4 = sampler.product_pure(4, {{1, 2}, {3}, {4}});
        EXPECT_LE(pure_concurrence(p4), k_nonsep_threshold(4, 2, 3) + 1e-10);
        const PureState b4 = sampler.product_pure(4, {{1, 3}, {2, 4}});
        EXPECT_LE(pure_concurrence(b4), k_nonsep_threshold(4, 2, 2) + 1e-10);
        const PureState b5 = sampler.product_pure(5, {{1, 4, 5}, {2, 3}});
        EXPECT_LE(pure_concurrence(b5), k_nonsep_threshold(5, 2, 2) + 1e-10);
    }
}

TEST(Detection, WorkedPoints) {
    const PureState ex4 = example4_state();
    EXPECT_TRUE(detect_k_nonseparability(white_noise_mix(ex4, 0.93), 3, BoundSource::THEOREM1).detected);
    EXPECT_FALSE(detect_k_nonseparability(white_noise_mix(ex4, 0.92), 3, BoundSource::THEOREM1).detected);
    const PureState ghz = ghz_state(4);
    EXPECT_TRUE(detect_k_nonseparability(white_noise_mix(ghz, 0.90), 3, BoundSource::GHZ_EXACT).detected);
    EXPECT_FALSE(detect_k_nonseparability(white_noise_mix(ghz, 0.89), 3, BoundSource::GHZ_EXACT).detected);
}

TEST(Detection, MaximallyMixedNeverDetected) {
    const DensityMatrix rho = maximally_mixed(4);
    for (int k = 2; k <= 4; ++k) {
        for (auto s : {BoundSource::THEOREM1, BoundSource::GHZ_EXACT}) {
            const WitnessVerdict v = detect_k_nonseparability(rho, k, s);
            EXPECT_FALSE(v.detected);
            EXPECT_EQ(v.certified_lower_bound_on_C, 0.0);
        }
    }
}

TEST(Detection, VerdictFields) {
    const WitnessVerdict v = detect_k_nonseparability(white_noise_mix(ghz_state(5), 1.0), 2, BoundSource::PURE_EXACT);
    EXPECT_EQ(v.n_parties, 5);
    EXPECT_EQ(v.local_dim, 2);
    EXPECT_EQ(v.k, 2);
    EXPECT_EQ(v.source, BoundSource::PURE_EXACT);
    EXPECT_NEAR(v.certified_lower_bound_on_C, pure_concurrence(ghz_state(5)), 1e-9);
    EXPECT_EQ(v.detected, v.certified_lower_bound_on_C > v.threshold);
}

TEST(Detection, SourceErrors) {
    const DensityMatrix rho4 = white_noise_mix(w_state(4), 0.5);
    EXPECT_EQ(kind_of([&] { certified_lower_bound(rho4, BoundSource::THEOREM2); }), ErrorKind::WrongQubitCount);
    EXPECT_EQ(kind_of([&] { certified_lower_bound(rho4, BoundSource::GHZ_EXACT); }), ErrorKind::NotInFamily);
    EXPECT_EQ(kind_of([&] { certified_lower_bound(rho4, BoundSource::PURE_EXACT); }), ErrorKind::NotInFamily);
    EXPECT_EQ(kind_of([&] { certified_lower_bound(rho4, BoundSource::USER_SUPPLIED); }),
              ErrorKind::ParameterOutOfRange);
    EXPECT_DOUBLE_EQ(certified_lower_bound(rho4, BoundSource::USER_SUPPLIED, 0.7), 0.7);
}

TEST(Detection, LocalUnitaryInvariance) {
    StateSampler sampler(62);
    for (double t : {0.5, 0.85, 0.93, 0.97}) {
        const DensityMatrix rho = white_noise_mix(example4_state(), t);
        const DensityMatrix sigma = apply_local_unitaries(rho, testing::random_local_unitaries(4, sampler));
        for (int k = 2; k <= 4; ++k) {
            const auto a = detect_k_nonseparability(rho, k, BoundSource::THEOREM1);
            const auto b = detect_k_nonseparability(sigma, k, BoundSource::THEOREM1);
            EXPECT_NEAR(a.certified_lower_bound_on_C, b.certified_lower_bound_on_C, 1e-9);
            EXPECT_EQ(a.detected, b.detected);
        }
    }
}

TEST(BoundSourceNames, ParseAndPrint) {
    EXPECT_EQ(parse_bound_source("t1"), BoundSource::THEOREM1);
    EXPECT_EQ(parse_bound_source("ghz-exact"), BoundSource::GHZ_EXACT);
    EXPECT_EQ(parse_bound_source("THEOREM3"), BoundSource::THEOREM3);
    EXPECT_FALSE(parse_bound_source("t9").has_value());
    EXPECT_EQ(to_string(BoundSource::USER_SUPPLIED), "USER_SUPPLIED");
}

TEST(Crossing, WorkedFamilies) {
    const NoisyFamily ex4{example4_state(), "t"};
    EXPECT_NEAR(*detection_threshold(ex4, DetectionGoal::k_nonseparable(3), BoundSource::THEOREM1), 0.9243, 1e-4);
    EXPECT_NEAR(*detection_threshold(ex4, DetectionGoal::entanglement(), BoundSource::THEOREM1), 1.0 / 3, 1e-4);
    const NoisyFamily ghz{ghz_state(4), "p"};
    EXPECT_NEAR(*detection_threshold(ghz, DetectionGoal::k_nonseparable(3), BoundSource::GHZ_EXACT), 0.8991, 1e-4);
    EXPECT_NEAR(*detection_threshold(ghz, DetectionGoal::entanglement(), BoundSource::GHZ_EXACT),
                ghz_noise_separability_edge(4), 1e-6);
    const NoisyFamily dicke{dicke_state(4, 2), "t"};
    EXPECT_NEAR(*detection_threshold(dicke, DetectionGoal::entanglement(), BoundSource::THEOREM1), 0.6, 1e-4);
}

TEST(Crossing, UndetectableFamilyGivesNoCrossing) {
    const NoisyFamily w{w_state(4), "t"};
    EXPECT_FALSE(detection_threshold(w, DetectionGoal::k_nonseparable(2), BoundSource::THEOREM1).has_value());
}

TEST(Crossing, UnsupportedSources) {
    const NoisyFamily w{w_state(4), "t"};
    EXPECT_EQ(kind_of([&] { family_lower_bound(w, 0.5, BoundSource::GHZ_EXACT); }), ErrorKind::NotInFamily);
    EXPECT_EQ(kind_of([&] { family_lower_bound(w, 0.5, BoundSource::PURE_EXACT); }), ErrorKind::UnsupportedSource);
}

TEST(DetectionGoalLabels, Labels) {
    EXPECT_EQ(DetectionGoal::entanglement().label(), "entangled");
    EXPECT_EQ(DetectionGoal::k_nonseparable(3).label(), "3-nonseparable");
    EXPECT_EQ(DetectionGoal::entanglement().threshold(4), 0.0);
}

}  // namespace
}  // namespace mqc
