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

#include <cmath>

#include "helpers.hpp"
#include "mqc/concurrence.hpp"
#include "mqc/error.hpp"
#include "mqc/states.hpp"

namespace mqc {
namespace {

void expect_amplitudes(const PureState &psi, const std::vector<std::size_t> &support, double value) {
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        const bool in = std::find(support.begin(), support.end(), i) != support.end();
        EXPECT_NEAR(std::abs(psi[i] - cplx(in ? value : 0.0)), 0.0, 1e-15) << "index " << i;
    }
}

double norm(const PureState &psi) {
    double s = 0;
    for (const cplx a : psi.amplitudes()) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

ErrorKind kind_of(const auto &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no mqc::Error thrown";
    return ErrorKind::ParseError;
}

TEST(NamedStates, WState) {
    expect_amplitudes(w_state(2), {1, 2}, 1 / std::sqrt(2.0));
    expect_amplitudes(w_state(4), {1, 2, 4, 8}, 0.5);
    EXPECT_NEAR(norm(w_state(4)), 1.0, 1e-15);
}

TEST(NamedStates, DickeState) {
    expect_amplitudes(dicke_state(4, 2), {3, 5, 6, 9, 10, 12}, 1 / std::sqrt(6.0));
    expect_amplitudes(dicke_state(3, 2), {3, 5, 6}, 1 / std::sqrt(3.0));
    for (int n = 2; n <= 8; ++n) {
        const auto d = dicke_state(n, 1), w = w_state(n);
        for (std::size_t i = 0; i < d.dim(); ++i) {
            EXPECT_EQ(d[i], w[i]);
        }
    }
}

TEST(NamedStates, GhzState) {
    expect_amplitudes(ghz_state(2), {0, 3}, 1 / std::sqrt(2.0));
    expect_amplitudes(ghz_state(4), {0, 15}, 1 / std::sqrt(2.0));
    for (int n = 2; n <= 6; ++n) {
        const ComplexMatrix r = ghz_state(n).projector();
        EXPECT_LT(max_abs_diff(partial_trace(r, SubsetMask::of({1}, n)), 0.5 * ComplexMatrix::identity(2)), 1e-15);
    }
}

TEST(NamedStates, ExampleStates) {
    expect_amplitudes(example3_state(), {3, 5, 6, 10}, 0.5);
    expect_amplitudes(example4_state(), {0, 3, 12, 15}, 0.5);
    EXPECT_NEAR(pure_concurrence(example4_state()), std::sqrt(7.0) / 2, 1e-12);
    const auto rho13 = DensityMatrix::from_pure(example3_state()).reduced(SubsetMask::of({1, 3}, 4));
    EXPECT_NEAR(wootters_concurrence(rho13), 0.0, 1e-12);
}

TEST(NamedStates, ErrorKinds) {
    EXPECT_EQ(kind_of([] { w_state(1); }), ErrorKind::TooFewQubits);
    EXPECT_EQ(kind_of([] { ghz_state(1); }), ErrorKind::TooFewQubits);
    EXPECT_EQ(kind_of([] { dicke_state(4, 0); }), ErrorKind::ExcitationOutOfRange);
    EXPECT_EQ(kind_of([] { dicke_state(4, 5); }), ErrorKind::ExcitationOutOfRange);
}

TEST(PureState, Validation) {
    EXPECT_THROW(PureState::from_amplitudes({1.0, 0.0, 0.0}), Error);
    EXPECT_THROW(PureState::from_amplitudes({1.0, 1.0}), Error);
    EXPECT_NO_THROW(PureState::from_amplitudes({1.0, 0.0}));
    const auto p = PureState::normalized({3.0, 4.0});
    EXPECT_NEAR(p[0].real(), 0.6, 1e-15);
}

TEST(WhiteNoise, EndpointsAndExample1Point) {
    const PureState w = w_state(4);
    const auto zero = white_noise_mix(w, 0.0);
    EXPECT_LT(max_abs_diff(zero.matrix(), (1.0 / 16) * ComplexMatrix::identity(16)), 1e-16);
    EXPECT_LT(max_abs_diff(white_noise_mix(w, 1.0).matrix(), w.projector()), 1e-16);
    const auto rho12 = white_noise_mix(w, 0.8).reduced(SubsetMask::of({1, 2}, 4));
    EXPECT_NEAR(wootters_concurrence(rho12), 0.1, 1e-12);
    EXPECT_EQ(kind_of([&] { white_noise_mix(w, 1.5); }), ErrorKind::ParameterOutOfRange);
    EXPECT_EQ(kind_of([&] { white_noise_mix(w, -0.1); }), ErrorKind::ParameterOutOfRange);
}

TEST(WhiteNoise, AffineInParameter) {
    const PureState d = dicke_state(4, 2);
    for (double x1 : {0.0, 0.3, 0.7}) {
        for (double x2 : {0.1, 0.5, 1.0}) {
            const ComplexMatrix mid = white_noise_mix(d, (x1 + x2) / 2).matrix();
            const ComplexMatrix avg = 0.5 * (white_noise_mix(d, x1).matrix() + white_noise_mix(d, x2).matrix());
            EXPECT_LT(max_abs_diff(mid, avg), 1e-14);
        }
    }
}

TEST(WhiteNoise, OutputsAreValidDensityMatrices) {
    for (double x : {0.0, 0.25, 0.9, 1.0}) {
        const auto rho = white_noise_mix(ghz_state(3), x);
        EXPECT_NO_THROW(DensityMatrix::from_matrix(rho.matrix()));
    }
}

TEST(DensityMatrix, RejectsEachInvariantByName) {
    auto message = [](const ComplexMatrix &m) -> std::string {
        try {
            DensityMatrix::from_matrix(m);
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvariantViolation);
            return e.what();
        }
        return "";
    };
    EXPECT_NE(message(ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}).find("ermitian"), std::string::npos);
    EXPECT_NE(message(ComplexMatrix{{0.6, 0.0}, {0.0, 0.6}}).find("trace"), std::string::npos);
    EXPECT_NE(message(ComplexMatrix{{1.2, 0.0}, {0.0, -0.2}}).find("semidefinite"), std::string::npos);
    EXPECT_NE(message(ComplexMatrix{{1.0, NAN}, {NAN, 0.0}}).find("finite"), std::string::npos);
    EXPECT_EQ(kind_of([] { DensityMatrix::from_matrix(ComplexMatrix::identity(3)); }), ErrorKind::DimensionMismatch);
}

TEST(DensityMatrix, RepairClampsTinyNegatives) {
    const ComplexMatrix m{{1.0 + 5e-9, 0.0}, {0.0, -5e-9}};
    EXPECT_THROW(DensityMatrix::from_matrix(m), Error);
    ValidationOptions repair;
    repair.repair = true;
    const auto rho = DensityMatrix::from_matrix(m, repair);
    EXPECT_NEAR(rho.matrix()(1, 1).real(), 0.0, 1e-15);
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-15);
    // Too negative to be rounding noise: still rejected.
    EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix{{1.1, 0.0}, {0.0, -0.1}}, repair), Error);
}

TEST(DensityMatrix, MaximallyMixed) {
    EXPECT_LT(max_abs_diff(maximally_mixed(3).matrix(), 0.125 * ComplexMatrix::identity(8)), 1e-16);
}

TEST(QubitsForDimension, PowersOfTwoOnly) {
    EXPECT_EQ(qubits_for_dimension(16), 4);
    EXPECT_THROW(qubits_for_dimension(12), Error);
}

}  // namespace
}  // namespace mqc
