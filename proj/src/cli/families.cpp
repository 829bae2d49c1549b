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

#include "families.hpp"

#include <charconv>
#include <string>

#include "mqc/bounds.hpp"
#include "mqc/error.hpp"

namespace mqc::cli {

std::optional<Family> parse_family(std::string_view name) {
    if (name == "w-noise") return Family::W_NOISE;
    if (name == "dicke-noise") return Family::DICKE_NOISE;
    if (name == "ex3") return Family::EX3;
    if (name == "ex4") return Family::EX4;
    if (name == "ghz-noise") return Family::GHZ_NOISE;
    return std::nullopt;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::W_NOISE:
            return "w-noise";
        case Family::DICKE_NOISE:
            return "dicke-noise";
        case Family::EX3:
            return "ex3";
        case Family::EX4:
            return "ex4";
        case Family::GHZ_NOISE:
            return "ghz-noise";
    }
    return "?";
}

NoisyFamily make_family(Family f, int n) {
    switch (f) {
        case Family::W_NOISE:
            return {w_state(n), "t"};
        case Family::DICKE_NOISE:
            return {dicke_state(n, n / 2), "t"};
        case Family::EX3:
        case Family::EX4:
            if (n != 4) {
                throw Error(ErrorKind::WrongQubitCount,
                            std::string(family_name(f)) + " is a four-qubit family, got --n " + std::to_string(n));
            }
            return f == Family::EX3 ? NoisyFamily{example3_state(), "a"} : NoisyFamily{example4_state(), "t"};
        case Family::GHZ_NOISE:
            return {ghz_state(n), "p"};
    }
    throw Error(ErrorKind::ParameterOutOfRange, "unknown family");
}

double Grid::at(int i) const {
    if (i == steps - 1) {
        return stop;
    }
    return start + (stop - start) * static_cast<double>(i) / (steps - 1);
}

Grid parse_grid(std::string_view text) {
    auto fail = [&] { return Error(ErrorKind::ParseError, "grid must be start:stop:steps, got '" + std::string(text) + "'"); };
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
        throw fail();
    }
    Grid g;
    auto num = [&](std::string_view s, auto &out) {
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc() || p != s.data() + s.size()) {
            throw fail();
        }
    };
    num(text.substr(0, c1), g.start);
    num(text.substr(c1 + 1, c2 - c1 - 1), g.stop);
    num(text.substr(c2 + 1), g.steps);
    if (!(0.0 <= g.start && g.start <= g.stop && g.stop <= 1.0) || g.steps < 2) {
        throw Error(ErrorKind::ParameterOutOfRange, "grid needs 0 <= start <= stop <= 1 and steps >= 2");
    }
    return g;
}

std::vector<BoundSource> applicable_sources(Family f, int n) {
    std::vector<BoundSource> out;
    if (theorem_applies(Theorem::T1, n)) out.push_back(BoundSource::THEOREM1);
    if (theorem_applies(Theorem::T2, n)) out.push_back(BoundSource::THEOREM2);
    if (theorem_applies(Theorem::T3, n)) out.push_back(BoundSource::THEOREM3);
    if (f == Family::GHZ_NOISE) out.push_back(BoundSource::GHZ_EXACT);
    return out;
}

}  // namespace mqc::cli
