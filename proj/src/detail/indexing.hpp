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
#include <vector>

#include "mqc/linalg.hpp"

namespace mqc::detail {

/// For every index r of the subsystem spanned by `labels` (first label most
/// significant), the matching bits of the full n-qubit basis index.
inline std::vector<std::size_t> scatter_indices(const std::vector<int> &labels, int n_qubits) {
    const int m = static_cast<int>(labels.size());
    const std::size_t count = std::size_t{1} << m;
    std::vector<std::size_t> out(count);
    for (std::size_t r = 0; r < count; ++r) {
        std::size_t full = 0;
        for (int j = 0; j < m; ++j) {
            if ((r >> (m - 1 - j)) & 1U) {
                full |= std::size_t{1} << basis_bit(labels[j], n_qubits);
            }
        }
        out[r] = full;
    }
    return out;
}

}  // namespace mqc::detail
