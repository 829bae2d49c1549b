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

#include <cstddef>

namespace mqc {

/// Numerical tolerances shared by every module.
struct Tolerances {
    double hermitian = 1e-10;       // max |m - m^dagger| entry
    double psd = 1e-10;             // most negative admissible eigenvalue
    double reconstruction = 1e-9;   // eigendecomposition reconstruction, max norm
    double trace = 1e-10;           // |Tr rho - 1|
    double norm = 1e-12;            // | ||psi|| - 1 |
    double radicand_clamp = 1e-10;  // radicands in [-clamp, 0) are treated as zero
    double repair_clamp = 1e-8;     // opt-in eigenvalue repair floor for near-PSD input
};

inline constexpr Tolerances kTolerances{};

/// Largest dense matrix dimension (2^12).
inline constexpr std::size_t kMaxDenseDim = std::size_t{1} << 12;

/// Largest qubit count accepted on state-vector-only paths.
inline constexpr int kMaxPureQubits = 14;

}  // namespace mqc
