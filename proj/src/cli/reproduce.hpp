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
#include <string>
#include <vector>

namespace mqc::cli {

enum class Relation {
    Within,   // |computed - expected| <= tolerance
    Below,    // computed < expected
    AtLeast,  // computed >= expected - tolerance
};

/// One computed-versus-expected line of a worked-example reproduction.
struct CheckLine {
    int example = 0;
    std::string quantity;
    double computed = 0;
    double expected = 0;
    double tolerance = 0;
    Relation relation = Relation::Within;
    bool pass = false;
};

std::string relation_symbol(Relation r);

/// Runs the configuration of worked example 1..6. `seed` drives the sampled
/// soundness line appended to each example.
std::vector<CheckLine> reproduce_example(int example, std::uint64_t seed);

}  // namespace mqc::cli
