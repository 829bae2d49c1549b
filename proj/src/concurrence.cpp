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

#include "mqc/concurrence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "detail/double_double.hpp"
#include "detail/indexing.hpp"
#include "mqc/error.hpp"

namespace mqc {

namespace {

using detail::DoubleDouble;

void require_subset_of(const PureState &psi, SubsetMask s) {
    if (s.n_qubits != psi.n_qubits()) {
        throw Error(ErrorKind::DimensionMismatch, "subset over " + std::to_string(s.n_qubits) + " qubits applied to a " +
                                                      std::to_string(psi.n_qubits()) + "-qubit state");
    }
}

void require_proper_cut(const PureState &psi, SubsetMask cut) {
    require_subset_of(psi, cut);
    if (cut.empty() || cut.complement().empty()) {
        throw Error(ErrorKind::EmptySubset, "a cut needs qubits on both sides");
    }
}

/// psi reshaped as a matrix: rows index the smaller side of the cut.
struct CutLayout {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

CutLayout layout_for(const PureState &psi, SubsetMask subset) {
    SubsetMask small = subset;
    if (subset.size() > subset.complement().size()) {
        small = subset.complement();
    }
    return {detail::scatter_indices(small.qubits(), psi.n_qubits()),
            detail::scatter_indices(small.complement().qubits(), psi.n_qubits())};
}

ComplexMatrix gram(const PureState &psi, const CutLayout &lay) {
    const std::size_t d = lay.rows.size();
    ComplexMatrix g(d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            cplx s = 0;
            for (const std::size_t c : lay.cols) {
                s += psi[lay.rows[a] | c] * std::conj(psi[lay.rows[b] | c]);
            }
            g(a, b) = s;
            g(b, a) = std::conj(s);
        }
    }
    return g;
}

double norm4(const PureState &psi) {
    double s = 0;
    for (const auto &z : psi.amplitudes()) {
        s += std::norm(z);
    }
    return s * s;
}

/// ||psi||^4 - Tr rho_S^2 (unnormalized linear entropy) in double precision.
double linear_entropy_fast(const PureState &psi, const CutLayout &lay) {
    const ComplexMatrix g = gram(psi, lay);
    double l = 0;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        for (std::size_t b = a + 1; b < g.dim(); ++b) {
            l += g(a, a).real() * g(b, b).real() - std::norm(g(a, b));
        }
    }
    return 2.0 * l;
}

/// Same quantity with double-double accumulation. Used near product states,
/// where the double-precision difference is dominated by rounding.
double linear_entropy_exact(const PureState &psi, const CutLayout &lay) {
    const std::size_t d = lay.rows.size();
    std::vector<DoubleDouble> re(d * d), im(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            DoubleDouble sr, si;
            for (const std::size_t c : lay.cols) {
                const cplx x = psi[lay.rows[a] | c];
                const cplx y = psi[lay.rows[b] | c];
                // x * conj(y)
                sr = sr + detail::two_prod(x.real(), y.real()) + detail::two_prod(x.imag(), y.imag());
                si = si + detail::two_prod(x.imag(), y.real()) - detail::two_prod(x.real(), y.imag());
            }
            re[a * d + b] = sr;
            im[a * d + b] = si;
        }
    }
    DoubleDouble l;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            const DoubleDouble det = re[a * d + a] * re[b * d + b] - re[a * d + b] * re[a * d + b] -
                                     im[a * d + b] * im[a * d + b];
            l = l + det;
        }
    }
    return 2.0 * (l.hi + l.lo);
}

// Below this normalized linear entropy the fast path loses most of its digits.
constexpr double kRefineBelow = 1e-6;

double clamp_radicand(double r, const char *what) {
    if (r < 0) {
        if (r < -kTolerances.radicand_clamp) {
            throw Error(ErrorKind::NegativeRadicand, std::string(what) + " radicand " + std::to_string(r));
        }
        return 0.0;
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------

PairwiseConcurrenceTable::PairwiseConcurrenceTable(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 2) {
        throw Error(ErrorKind::TooFewQubits, "pairwise table needs at least two qubits");
    }
    for (int i = 1; i <= n_qubits; ++i) {
        for (int j = i + 1; j <= n_qubits; ++j) {
            entries_.push_back({i, j, 0.0});
        }
    }
}

std::size_t PairwiseConcurrenceTable::slot(int i, int j) const {
    if (i > j) {
        std::swap(i, j);
    }
    if (i < 1 || j > n_qubits_ || i == j) {
        throw Error(ErrorKind::ParameterOutOfRange,
                    "pair (" + std::to_string(i) + "," + std::to_string(j) + ") in a " + std::to_string(n_qubits_) +
                        "-qubit table");
    }
    // Row-major packed upper triangle.
    const auto n = static_cast<std::size_t>(n_qubits_);
    const auto r = static_cast<std::size_t>(i - 1);
    return r * n - r * (r + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

double PairwiseConcurrenceTable::operator()(int i, int j) const {
    return entries_[slot(i, j)].value;
}

void PairwiseConcurrenceTable::set(int i, int j, double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorKind::ParameterOutOfRange, "pair concurrence " + std::to_string(value) + " outside [0, 1]");
    }
    entries_[slot(i, j)].value = value;
}

double PairwiseConcurrenceTable::squared_sum() const {
    double s = 0;
    for (const auto &e : entries_) {
        s += e.value * e.value;
    }
    return s;
}

double CutConcurrenceProfile::size_sum(int size) const {
    double s = 0;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        if (subsets[k].size() == size) {
            s += values[k];
        }
    }
    return s;
}

// ---------------------------------------------------------------------------

double subset_purity(const PureState &psi, SubsetMask subset) {
    require_subset_of(psi, subset);
    if (subset.empty()) {
        throw Error(ErrorKind::EmptySubset, "purity of an empty subsystem");
    }
    if (subset.complement().empty()) {
        double s = 0;
        for (const auto &z : psi.amplitudes()) {
            s += std::norm(z);
        }
        return s * s;
    }
    const ComplexMatrix g = gram(psi, layout_for(psi, subset));
    double s = 0;
    for (const auto &z : g.entries()) {
        s += std::norm(z);
    }
    return s;
}

double purity_sum(const PureState &psi) {
    const int n = psi.n_qubits();
    if (n < 2) {
        throw Error(ErrorKind::TooFewQubits, "purity sum needs at least two qubits");
    }
    // Complementary subsets share their purity; visit one per pair.
    double s = 0;
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    for (std::uint64_t b = 1; b < half; ++b) {
        s += 2.0 * subset_purity(psi, SubsetMask(b, n));
    }
    return s;
}

ComplexMatrix reduced_density(const PureState &psi, SubsetMask keep) {
    require_subset_of(psi, keep);
    if (keep.empty()) {
        throw Error(ErrorKind::EmptySubset, "reduced state must keep at least one qubit");
    }
    const auto rows = detail::scatter_indices(keep.qubits(), psi.n_qubits());
    const auto cols = detail::scatter_indices(keep.complement().qubits(), psi.n_qubits());
    if (rows.size() > kMaxDenseDim) {
        throw Error(ErrorKind::DimensionOverflow, "reduced state of dimension " + std::to_string(rows.size()));
    }
    ComplexMatrix rho(rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = a; b < rows.size(); ++b) {
            cplx s = 0;
            for (const std::size_t c : cols) {
                s += psi[rows[a] | c] * std::conj(psi[rows[b] | c]);
            }
            rho(a, b) = s;
            rho(b, a) = std::conj(s);
        }
    }
    return rho;
}

double pure_concurrence(const PureState &psi) {
    const int n = psi.n_qubits();
    if (n < 2) {
        throw Error(ErrorKind::TooFewQubits, "multipartite concurrence needs at least two qubits");
    }
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    std::vector<CutLayout> layouts;
    layouts.reserve(half - 1);
    for (std::uint64_t b = 1; b < half; ++b) {
        layouts.push_back(layout_for(psi, SubsetMask(b, n)));
    }
    const double scale = norm4(psi);

    // 2^N - 2 - sum Tr rho^2 = sum over subsets of (1 - Tr rho^2); each bipartition appears twice.
    double radicand = 0;
    for (const auto &lay : layouts) {
        radicand += 2.0 * linear_entropy_fast(psi, lay);
    }
    radicand /= scale;
    if (radicand < kRefineBelow) {
        radicand = 0;
        for (const auto &lay : layouts) {
            radicand += 2.0 * linear_entropy_exact(psi, lay);
        }
        radicand /= scale;
    }
    radicand = clamp_radicand(radicand, "concurrence");
    return std::exp2(1.0 - n / 2.0) * std::sqrt(radicand);
}

double cut_concurrence_squared(const PureState &psi, SubsetMask cut) {
    require_proper_cut(psi, cut);
    const CutLayout lay = layout_for(psi, cut);
    const double scale = norm4(psi);
    double l = linear_entropy_fast(psi, lay) / scale;
    if (l < kRefineBelow) {
        l = linear_entropy_exact(psi, lay) / scale;
    }
    return 2.0 * std::max(l, 0.0);
}

CutConcurrenceProfile cut_profile(const PureState &psi) {
    const int n = psi.n_qubits();
    CutConcurrenceProfile out;
    out.n_qubits = n;
    out.subsets = proper_subsets(n);
    out.values.assign(out.subsets.size(), 0.0);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::size_t k = 0; k < out.subsets.size(); ++k) {
        const std::uint64_t b = out.subsets[k].bits;
        const std::uint64_t c = full & ~b;
        if (b < c) {
            const double v = cut_concurrence_squared(psi, out.subsets[k]);
            out.values[k] = v;
            out.values[c - 1] = v;  // subsets[k] has bits k + 1
        }
    }
    return out;
}

double wootters_concurrence(const ComplexMatrix &rho) {
    if (rho.dim() != 4) {
        throw Error(ErrorKind::WrongDimension,
                    "Wootters concurrence needs a 4x4 matrix, got " + std::to_string(rho.dim()) + "x" +
                        std::to_string(rho.dim()));
    }
    static const ComplexMatrix yy = kron(pauli::y(), pauli::y());
    const ComplexMatrix flipped = yy * rho.conjugate() * yy;
    const ComplexMatrix root = psd_sqrt(rho);
    ComplexMatrix m = root * flipped * root;
    m = 0.5 * (m + m.adjoint());
    const Eigensystem es = hermitian_eigensystem(m);

    // Eigenvalues of sqrt(rho) rho~ sqrt(rho) are the squared lambdas; values at the
    // rounding floor are zeros and must not be square-rooted into 1e-8 noise.
    const double floor = 32.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(es.values.front()));
    double lambda[4];
    for (int k = 0; k < 4; ++k) {
        const double v = es.values[k];
        lambda[k] = v <= floor ? 0.0 : std::sqrt(v);
    }
    const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    return std::clamp(c, 0.0, 1.0);
}

double wootters_concurrence(const DensityMatrix &rho) {
    if (rho.n_qubits() != 2) {
        throw Error(ErrorKind::WrongDimension,
                    "Wootters concurrence needs two qubits, got " + std::to_string(rho.n_qubits()));
    }
    return wootters_concurrence(rho.matrix());
}

PairwiseConcurrenceTable pairwise_table(const DensityMatrix &rho) {
    const int n = rho.n_qubits();
    PairwiseConcurrenceTable table(n);
    for (const auto &e : std::vector(table.entries())) {
        const ComplexMatrix pair = partial_trace(rho.matrix(), SubsetMask::of({e.i, e.j}, n));
        table.set(e.i, e.j, wootters_concurrence(pair));
    }
    return table;
}

PairwiseConcurrenceTable pairwise_table(const PureState &psi) {
    const int n = psi.n_qubits();
    PairwiseConcurrenceTable table(n);
    for (const auto &e : std::vector(table.entries())) {
        table.set(e.i, e.j, wootters_concurrence(reduced_density(psi, SubsetMask::of({e.i, e.j}, n))));
    }
    return table;
}

std::complex<double> h_invariant(const PureState &psi) {
    const int n = psi.n_qubits();
    const std::size_t full = psi.dim() - 1;
    // sigma_y^{(x)n} |y> = i^{zeros(y) - ones(y)} |~y>, so the x-component of
    // sigma_y^{(x)n} |psi*> is psi*_{~x} i^{2 ones(x) - n}.
    static constexpr cplx kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    cplx h = 0;
    for (std::size_t x = 0; x <= full; ++x) {
        const int exponent = ((2 * std::popcount(x) - n) % 4 + 4) % 4;
        h += std::conj(psi[x]) * std::conj(psi[full ^ x]) * kPowersOfI[exponent];
    }
    return h;
}

}  // namespace mqc
