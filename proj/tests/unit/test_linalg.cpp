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
#include <numeric>

#include "helpers.hpp"
#include "mqc/error.hpp"
#include "mqc/linalg.hpp"
#include "mqc/states.hpp"

namespace mqc {
namespace {

using testing::random_density;
using testing::random_hermitian;
using testing::random_matrix;

TEST(Eigensystem, IdentityHasUnitSpectrum) {
    const auto es = hermitian_eigensystem(ComplexMatrix::identity(2));
    EXPECT_DOUBLE_EQ(es.values[0], 1.0);
    EXPECT_DOUBLE_EQ(es.values[1], 1.0);
}

TEST(Eigensystem, PauliYSpectrumIsPlusMinusOne) {
    const auto es = hermitian_eigensystem(pauli::y());
    EXPECT_NEAR(es.values[0], 1.0, 1e-14);
    EXPECT_NEAR(es.values[1], -1.0, 1e-14);
}

TEST(Eigensystem, ReconstructsRandomHermitian) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix h = random_hermitian(8, rng);
        const auto es = hermitian_eigensystem(h);
        const ComplexMatrix v = es.vectors;
        const ComplexMatrix rebuilt = v * ComplexMatrix::diagonal(es.values) * v.adjoint();
        EXPECT_LT(max_abs_diff(rebuilt, h), 1e-9);
        EXPECT_LT(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(8)), 1e-12);
        EXPECT_TRUE(std::is_sorted(es.values.rbegin(), es.values.rend()));
    }
}

TEST(Eigensystem, EigenvalueSumEqualsTrace) {
    std::mt19937_64 rng(12);
    for (std::size_t dim : {1U, 2U, 5U, 16U}) {
        const ComplexMatrix h = random_hermitian(dim, rng);
        const auto es = hermitian_eigensystem(h);
        const double sum = std::accumulate(es.values.begin(), es.values.end(), 0.0);
        EXPECT_NEAR(sum, h.trace().real(), 1e-10);
    }
}

TEST(Eigensystem, DeterministicBitForBit) {
    std::mt19937_64 rng(13);
    const ComplexMatrix h = random_hermitian(16, rng);
    const auto a = hermitian_eigensystem(h);
    const auto b = hermitian_eigensystem(h);
    EXPECT_EQ(a.values, b.values);
    EXPECT_TRUE(a.vectors == b.vectors);
}

TEST(Eigensystem, RejectsNonHermitian) {
    const ComplexMatrix m{{1.0, 1.0}, {0.0, 1.0}};
    try {
        hermitian_eigensystem(m);
        FAIL() << "expected NotHermitian";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
    }
}

TEST(PsdSqrt, DiagonalAndZero) {
    const std::vector<double> d{4.0, 1.0};
    const std::vector<double> r{2.0, 1.0};
    EXPECT_LT(max_abs_diff(psd_sqrt(ComplexMatrix::diagonal(d)), ComplexMatrix::diagonal(r)), 1e-14);
    EXPECT_LT(max_abs_diff(psd_sqrt(ComplexMatrix(3)), ComplexMatrix(3)), 1e-15);
}

TEST(PsdSqrt, SquaresBackToRandomPsd) {
    std::mt19937_64 rng(14);
    const ComplexMatrix a = random_matrix(4, rng);
    const ComplexMatrix m = a.adjoint() * a;
    const ComplexMatrix r = psd_sqrt(m);
    EXPECT_LT(max_abs_diff(r * r, m), 1e-8);
    EXPECT_LT(r.hermiticity_error(), 1e-12);
}

TEST(PsdSqrt, RejectsNegativeEigenvalue) {
    const std::vector<double> d{1.0, -0.5};
    EXPECT_THROW(psd_sqrt(ComplexMatrix::diagonal(d)), Error);
}

TEST(Kron, IdentitiesAndPauliY) {
    EXPECT_TRUE(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
    const ComplexMatrix yy = kron(pauli::y(), pauli::y());
    const cplx anti[4] = {-1.0, 1.0, 1.0, -1.0};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_EQ(yy(i, j), i + j == 3 ? anti[i] : cplx(0.0));
        }
    }
}

TEST(Kron, MixedProductIdentity) {
    std::mt19937_64 rng(15);
    for (int rep = 0; rep < 10; ++rep) {
        const auto a = random_matrix(2, rng), b = random_matrix(2, rng);
        const auto c = random_matrix(2, rng), d = random_matrix(2, rng);
        EXPECT_LT(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
    }
}

TEST(Kron, Associative) {
    std::mt19937_64 rng(16);
    for (int rep = 0; rep < 10; ++rep) {
        const auto a = random_matrix(2, rng), b = random_matrix(3, rng), c = random_matrix(2, rng);
        EXPECT_LT(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    }
}

TEST(Kron, DimensionOverflow) {
    try {
        kron(ComplexMatrix::identity(64), ComplexMatrix::identity(128));
        FAIL() << "expected DimensionOverflow";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionOverflow);
    }
}

TEST(PartialTrace, ProductStateKeepsFirstFactor) {
    const ComplexMatrix rho = basis_state(2, 0).projector();
    const ComplexMatrix r = partial_trace(rho, SubsetMask::of({1}, 2));
    EXPECT_LT(max_abs_diff(r, ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}), 1e-15);
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
    const ComplexMatrix r = partial_trace(ghz_state(2).projector(), SubsetMask::of({1}, 2));
    EXPECT_LT(max_abs_diff(r, 0.5 * ComplexMatrix::identity(2)), 1e-15);
}

TEST(PartialTrace, WStateSingleQubitMarginal) {
    // Hand count: qubit 1 is |1> in exactly one of the four W_4 terms.
    const ComplexMatrix r = partial_trace(w_state(4).projector(), SubsetMask::of({1}, 4));
    const std::vector<double> expected{0.75, 0.25};
    EXPECT_LT(max_abs_diff(r, ComplexMatrix::diagonal(expected)), 1e-15);
}

TEST(PartialTrace, QubitOneIsMostSignificant) {
    // |01>: qubit 1 in |0>, qubit 2 in |1>.
    const ComplexMatrix rho = basis_state(2, 1).projector();
    EXPECT_EQ(partial_trace(rho, SubsetMask::of({1}, 2))(0, 0), cplx(1.0));
    EXPECT_EQ(partial_trace(rho, SubsetMask::of({2}, 2))(1, 1), cplx(1.0));
}

TEST(PartialTrace, KronFactorsRecovered) {
    std::mt19937_64 rng(17);
    const ComplexMatrix a = random_density(1, rng).matrix();
    const ComplexMatrix b = random_density(2, rng).matrix();
    const ComplexMatrix ab = kron(a, b);
    EXPECT_LT(max_abs_diff(partial_trace(ab, SubsetMask::of({1}, 3)), a), 1e-14);
    EXPECT_LT(max_abs_diff(partial_trace(ab, SubsetMask::of({2, 3}, 3)), b), 1e-14);
}

TEST(PartialTrace, CompositionMatchesDirect) {
    std::mt19937_64 rng(18);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix rho = random_density(4, rng).matrix();
        // Trace out {4} then {2} (relabelled as qubit 2 of the remaining three).
        const ComplexMatrix step1 = partial_trace(rho, SubsetMask::of({1, 2, 3}, 4));
        const ComplexMatrix step2 = partial_trace(step1, SubsetMask::of({1, 3}, 3));
        const ComplexMatrix direct = partial_trace(rho, SubsetMask::of({1, 3}, 4));
        EXPECT_LT(max_abs_diff(step2, direct), 1e-12);
    }
}

TEST(PartialTrace, Errors) {
    const ComplexMatrix rho = ComplexMatrix::identity(4);
    EXPECT_THROW(partial_trace(rho, SubsetMask(0, 2)), Error);
    EXPECT_THROW(partial_trace(rho, SubsetMask(1, 3)), Error);
}

TEST(Purity, Values) {
    EXPECT_DOUBLE_EQ(purity(0.5 * ComplexMatrix::identity(2)), 0.5);
    EXPECT_NEAR(purity(w_state(3).projector()), 1.0, 1e-15);
    const std::vector<double> d{0.75, 0.25};
    EXPECT_DOUBLE_EQ(purity(ComplexMatrix::diagonal(d)), 0.625);
}

TEST(SubsetMask, Basics) {
    const SubsetMask s = SubsetMask::of({1, 3}, 4);
    EXPECT_EQ(s.bits, 0b0101U);
    EXPECT_EQ(s.size(), 2);
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.complement(), SubsetMask::of({2, 4}, 4));
    EXPECT_EQ(s.qubits(), (std::vector<int>{1, 3}));
    EXPECT_TRUE(s.proper());
    EXPECT_FALSE(SubsetMask(0b1111, 4).proper());
}

TEST(SubsetMask, ProperSubsetsInMaskOrder) {
    const auto subsets = proper_subsets(4);
    ASSERT_EQ(subsets.size(), 14U);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        EXPECT_EQ(subsets[i].bits, i + 1);
    }
}

}  // namespace
}  // namespace mqc
