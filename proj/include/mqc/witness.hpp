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
#include <string_view>

#include "mqc/bounds.hpp"
#include "mqc/states.hpp"

namespace mqc {

/// Where a certified lower bound on the concurrence comes from.
enum class BoundSource {
    THEOREM1,
    THEOREM2,
    THEOREM3,
    GHZ_EXACT,     // rho must be GHZ + white noise
    PURE_EXACT,    // rho must be pure
    USER_SUPPLIED, // caller provides the value
};

std::string_view to_string(BoundSource s);
std::optional<BoundSource> parse_bound_source(std::string_view text);

/// Exact binomial coefficient; n <= 62.
std::uint64_t binomial(int n, int i);

/// Concurrence value above which an N-partite state with local dimension d
/// is k-nonseparable. With `min_block_size` = |A| the pure-state form with
/// 1/d^{|A|} is returned instead of the worst case |A| = 1.
double k_nonsep_threshold(int n, int d, int k, std::optional<int> min_block_size = std::nullopt);

/// One-sided verdict: `detected == false` means "not detected", never "separable".
struct WitnessVerdict {
    int n_parties = 0;
    int local_dim = 2;
    int k = 2;
    double threshold = 0;
    double certified_lower_bound_on_C = 0;
    BoundSource source = BoundSource::THEOREM1;
    bool detected = false;
};

/// Lower bound on C(rho) from the given source. `user_value` is read only for USER_SUPPLIED.
double certified_lower_bound(const DensityMatrix &rho, BoundSource source,
                             std::optional<double> user_value = std::nullopt);

WitnessVerdict detect_k_nonseparability(const DensityMatrix &rho, int k, BoundSource source,
                                        std::optional<double> user_value = std::nullopt);

/// Either k-nonseparability (k_nonsep_threshold) or plain entanglement (threshold 0).
class DetectionGoal {
   public:
    static DetectionGoal k_nonseparable(int k) {
        return DetectionGoal(k);
    }
    static DetectionGoal entanglement() {
        return DetectionGoal(std::nullopt);
    }

    std::optional<int> k() const noexcept {
        return k_;
    }
    double threshold(int n_qubits) const;
    std::string label() const;

   private:
    explicit DetectionGoal(std::optional<int> k) : k_(k) {
    }
    std::optional<int> k_;
};

/// Certified concurrence lower bound of family.at(x).
double family_lower_bound(const NoisyFamily &family, double x, BoundSource source);

struct CrossingOptions {
    int samples = 101;            // monotonicity check grid on [0, 1]
    double tolerance = 1e-7;      // final bracket width
    double monotone_slack = 1e-9;
};

/// Smallest family parameter above which the certified bound exceeds the
/// goal's threshold; nullopt when even x = 1 is not detected.
std::optional<double> detection_threshold(const NoisyFamily &family, const DetectionGoal &goal, BoundSource source,
                                          const CrossingOptions &options = {});

}  // namespace mqc
