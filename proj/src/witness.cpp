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

#include "mqc/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mqc/concurrence.hpp"
#include "mqc/error.hpp"

namespace mqc {

std::string_view to_string(BoundSource s) {
    switch (s) {
        case BoundSource::THEOREM1:
            return "THEOREM1";
        case BoundSource::THEOREM2:
            return "THEOREM2";
        case BoundSource::THEOREM3:
            return "THEOREM3";
        case BoundSource::GHZ_EXACT:
            return "GHZ_EXACT";
        case BoundSource::PURE_EXACT:
            return "PURE_EXACT";
        case BoundSource::USER_SUPPLIED:
            return "USER_SUPPLIED";
    }
    return "?";
}

std::optional<BoundSource> parse_bound_source(std::string_view text) {
    if (text == "t1" || text == "THEOREM1") return BoundSource::THEOREM1;
    if (text == "t2" || text == "THEOREM2") return BoundSource::THEOREM2;
    if (text == "t3" || text == "THEOREM3") return BoundSource::THEOREM3;
    if (text == "ghz-exact" || text == "GHZ_EXACT") return BoundSource::GHZ_EXACT;
    if (text == "pure-exact" || text == "PURE_EXACT") return BoundSource::PURE_EXACT;
    if (text == "user" || text == "USER_SUPPLIED") return BoundSource::USER_SUPPLIED;
    return std::nullopt;
}

std::uint64_t binomial(int n, int i) {
    if (n < 0 || n > 62 || i < 0 || i > n) {
        throw Error(ErrorKind::ParameterOutOfRange, "binomial(" + std::to_string(n) + ", " + std::to_string(i) + ")");
    }
    // Pascal's rule keeps every intermediate below C(62, 31) < 2^63.
    std::vector<std::uint64_t> row(static_cast<std::size_t>(i) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, i); j >= 1; --j) {
            row[j] += row[j - 1];
        }
    }
    return row[i];
}

double k_nonsep_threshold(int n, int d, int k, std::optional<int> min_block_size) {
    if (n < 2 || n > 62) {
        throw Error(ErrorKind::ParameterOutOfRange, "party count " + std::to_string(n) + " outside 2..62");
    }
    if (d < 2) {
        throw Error(ErrorKind::ParameterOutOfRange, "local dimension " + std::to_string(d) + " < 2");
    }
    if (k < 2 || k > n) {
        throw Error(ErrorKind::ParameterOutOfRange, "k = " + std::to_string(k) + " outside 2.." + std::to_string(n));
    }
    int block = 1;
    if (min_block_size) {
        block = *min_block_size;
        if (block < 1 || block * k > n) {
            throw Error(ErrorKind::ParameterOutOfRange, "smallest block size " + std::to_string(block) +
                                                            " impossible for a " + std::to_string(k) +
                                                            "-partition of " + std::to_string(n));
        }
    }
    const double dd = d;
    double radicand = std::exp2(n) - std::exp2(k) + (std::exp2(k) - 2.0) / std::pow(dd, block);
    const int last = n % 2 == 1 ? (n - 1) / 2 : n / 2 - 1;
    for (int i = 1; i <= last; ++i) {
        radicand -= 2.0 * static_cast<double>(binomial(n, i)) / std::pow(dd, i);
    }
    if (n % 2 == 0) {
        radicand -= static_cast<double>(binomial(n, n / 2)) / std::pow(dd, n / 2);
    }
    if (radicand < 0) {
        if (radicand < -kTolerances.radicand_clamp) {
            throw Error(ErrorKind::NegativeRadicand, "threshold radicand " + std::to_string(radicand) + " for (N, d, k) = (" +
                                                         std::to_string(n) + ", " + std::to_string(d) + ", " +
                                                         std::to_string(k) + ")");
        }
        radicand = 0;
    }
    return std::exp2(1.0 - n / 2.0) * std::sqrt(radicand);
}

namespace {

std::optional<double> ghz_family_parameter(const DensityMatrix &rho) {
    const int n = rho.n_qubits();
    const std::size_t last = rho.matrix().dim() - 1;
    const double p = 2.0 * rho.matrix()(0, last).real();
    if (p < -1e-9 || p > 1.0 + 1e-9) {
        return std::nullopt;
    }
    const double clamped = std::clamp(p, 0.0, 1.0);
    const DensityMatrix model = white_noise_mix(ghz_state(n), clamped);
    if (max_abs_diff(model.matrix(), rho.matrix()) > 1e-9) {
        return std::nullopt;
    }
    return clamped;
}

double pure_lower_bound(const DensityMatrix &rho) {
    if (purity(rho.matrix()) < 1.0 - 1e-9) {
        throw Error(ErrorKind::NotInFamily, "PURE_EXACT needs a pure state; Tr rho^2 = " +
                                                std::to_string(purity(rho.matrix())));
    }
    const Eigensystem es = hermitian_eigensystem(rho.matrix());
    std::vector<cplx> amps(rho.matrix().dim());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = es.vectors(i, 0);
    }
    return pure_concurrence(PureState::normalized(std::move(amps)));
}

Theorem theorem_for(BoundSource s) {
    switch (s) {
        case BoundSource::THEOREM1:
            return Theorem::T1;
        case BoundSource::THEOREM2:
            return Theorem::T2;
        case BoundSource::THEOREM3:
            return Theorem::T3;
        default:
            break;
    }
    throw Error(ErrorKind::UnsupportedSource, std::string(to_string(s)) + " is not a pairwise theorem");
}

bool is_theorem(BoundSource s) {
    return s == BoundSource::THEOREM1 || s == BoundSource::THEOREM2 || s == BoundSource::THEOREM3;
}

}  // namespace

double certified_lower_bound(const DensityMatrix &rho, BoundSource source, std::optional<double> user_value) {
    if (is_theorem(source)) {
        const Theorem t = theorem_for(source);
        if (!theorem_applies(t, rho.n_qubits())) {
            throw Error(ErrorKind::WrongQubitCount, std::string(to_string(source)) + " does not apply to " +
                                                        std::to_string(rho.n_qubits()) + " qubits");
        }
        return theorem_bound(t, pairwise_table(rho)).bound_on_C;
    }
    switch (source) {
        case BoundSource::GHZ_EXACT: {
            const auto p = ghz_family_parameter(rho);
            if (!p) {
                throw Error(ErrorKind::NotInFamily, "state is not GHZ mixed with white noise");
            }
            return ghz_noise_exact_concurrence(rho.n_qubits(), *p);
        }
        case BoundSource::PURE_EXACT:
            return pure_lower_bound(rho);
        case BoundSource::USER_SUPPLIED:
            if (!user_value || !(*user_value >= 0.0) || !std::isfinite(*user_value)) {
                throw Error(ErrorKind::ParameterOutOfRange, "USER_SUPPLIED needs a finite non-negative value");
            }
            return *user_value;
        default:
            break;
    }
    throw Error(ErrorKind::UnsupportedSource, std::string(to_string(source)));
}

WitnessVerdict detect_k_nonseparability(const DensityMatrix &rho, int k, BoundSource source,
                                        std::optional<double> user_value) {
    WitnessVerdict v;
    v.n_parties = rho.n_qubits();
    v.local_dim = 2;
    v.k = k;
    v.source = source;
    v.threshold = k_nonsep_threshold(v.n_parties, v.local_dim, k);
    v.certified_lower_bound_on_C = certified_lower_bound(rho, source, user_value);
    v.detected = v.certified_lower_bound_on_C > v.threshold;
    return v;
}

double DetectionGoal::threshold(int n_qubits) const {
    return k_ ? k_nonsep_threshold(n_qubits, 2, *k_) : 0.0;
}

std::string DetectionGoal::label() const {
    return k_ ? std::to_string(*k_) + "-nonseparable" : "entangled";
}

double family_lower_bound(const NoisyFamily &family, double x, BoundSource source) {
    const int n = family.base.n_qubits();
    if (source == BoundSource::GHZ_EXACT) {
        if (max_abs_diff(family.base.projector(), ghz_state(n).projector()) > 1e-12) {
            throw Error(ErrorKind::NotInFamily, "GHZ_EXACT needs a GHZ base state");
        }
        return ghz_noise_exact_concurrence(n, x);
    }
    if (!is_theorem(source)) {
        throw Error(ErrorKind::UnsupportedSource,
                    std::string(to_string(source)) + " cannot be evaluated along a noisy family");
    }
    return certified_lower_bound(family.at(x), source);
}

std::optional<double> detection_threshold(const NoisyFamily &family, const DetectionGoal &goal, BoundSource source,
                                          const CrossingOptions &options) {
    if (options.samples < 2) {
        throw Error(ErrorKind::ParameterOutOfRange, "need at least two monotonicity samples");
    }
    const double threshold = goal.threshold(family.base.n_qubits());
    auto bound = [&](double x) { return family_lower_bound(family, x, source); };

    const int m = options.samples;
    std::vector<double> xs(m), fs(m);
    for (int i = 0; i < m; ++i) {
        xs[i] = static_cast<double>(i) / (m - 1);
        fs[i] = bound(xs[i]);
        if (i > 0 && fs[i] < fs[i - 1] - options.monotone_slack) {
            throw Error(ErrorKind::NonMonotoneFamily, "bound drops from " + std::to_string(fs[i - 1]) + " to " +
                                                          std::to_string(fs[i]) + " at x = " + std::to_string(xs[i]));
        }
    }
    if (!(fs.back() > threshold)) {
        return std::nullopt;
    }
    if (fs.front() > threshold) {
        return 0.0;
    }
    int first = 1;
    while (!(fs[first] > threshold)) {
        ++first;
    }
    double lo = xs[first - 1];
    double hi = xs[first];
    while (hi - lo > options.tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (bound(mid) > threshold) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace mqc
