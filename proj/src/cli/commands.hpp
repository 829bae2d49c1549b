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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "families.hpp"
#include "mqc/witness.hpp"
#include "output.hpp"

namespace mqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoDetection = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalFailure = 3;

/// A density matrix from --state, or a family point from --family/--n/--param.
struct InputSpec {
    std::optional<std::string> state_file;
    std::optional<Family> family;
    int n_qubits = 4;
    std::optional<double> param;
    bool repair = false;
};

struct CommandOutcome {
    Report report;
    int exit_code = kExitOk;
};

CommandOutcome cmd_bound(const InputSpec &input);

struct WitnessOptions {
    std::vector<int> ks;                // empty: 2..N
    std::vector<BoundSource> sources;   // empty: every applicable source
    std::optional<double> user_value;   // for USER_SUPPLIED
    bool require_detection = false;
};

CommandOutcome cmd_witness(const InputSpec &input, const WitnessOptions &options);

/// Grid points are evaluated on `workers` threads; rows keep grid order.
CommandOutcome cmd_sweep(const SweepSpec &spec, unsigned workers = 0);

/// Examples 1..6; an empty list runs all of them.
CommandOutcome cmd_reproduce(const std::vector<int> &examples, std::uint64_t seed);

struct ThresholdOptions {
    std::optional<Family> family;
    int n_qubits = 4;
    int local_dim = 2;
    std::optional<int> k;               // absent: entanglement (with --family)
    std::optional<int> min_block_size;
    std::vector<BoundSource> sources;
};

/// Without a family: the k-nonseparability threshold value. With a family:
/// the solved crossing parameter for each source.
CommandOutcome cmd_threshold(const ThresholdOptions &options);

}  // namespace mqc::cli
