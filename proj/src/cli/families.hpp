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
#include <string>
#include <string_view>
#include <vector>

#include "mqc/states.hpp"
#include "mqc/witness.hpp"

namespace mqc::cli {

enum class Family { W_NOISE, DICKE_NOISE, EX3, EX4, GHZ_NOISE };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Builds the noisy family; `n` must be 4 for EX3/EX4. The Dicke family uses
/// floor(n/2) excitations.
NoisyFamily make_family(Family f, int n);

struct Grid {
    double start = 0;
    double stop = 1;
    int steps = 101;

    double at(int i) const;
};

/// "a:b:steps" with 0 <= a <= b <= 1 and steps >= 2.
Grid parse_grid(std::string_view text);

struct SweepSpec {
    Family family = Family::W_NOISE;
    int n_qubits = 4;
    Grid grid;
    std::optional<int> k;
    std::vector<BoundSource> sources;  // empty: every applicable source
};

/// Sources that can be evaluated along the family (theorems for its N, plus GHZ_EXACT on the GHZ family).
std::vector<BoundSource> applicable_sources(Family f, int n);

}  // namespace mqc::cli
