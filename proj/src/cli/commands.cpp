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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "mqc/bounds.hpp"
#include "mqc/concurrence.hpp"
#include "mqc/error.hpp"
#include "mqc/matrix_io.hpp"
#include "reproduce.hpp"

namespace mqc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct ResolvedInput {
    DensityMatrix rho;
    Json description;
    std::optional<Family> family;
};

ResolvedInput resolve(const InputSpec &in) {
    if (in.state_file && in.family) {
        throw Error(ErrorKind::ParseError, "give either --state or --family, not both");
    }
    if (in.state_file) {
        ValidationOptions opts;
        opts.repair = in.repair;
        DensityMatrix rho = load_density_matrix_file(*in.state_file, opts);
        return {std::move(rho), Json{{"state", *in.state_file}}, std::nullopt};
    }
    if (!in.family) {
        throw Error(ErrorKind::ParseError, "an input is required: --state <file> or --family <name>");
    }
    if (!in.param) {
        throw Error(ErrorKind::ParseError, "--family needs --param");
    }
    const NoisyFamily fam = make_family(*in.family, in.n_qubits);
    Json desc{{"family", family_name(*in.family)},
              {"n", in.n_qubits},
              {"param", round_significant(*in.param)},
              {"parameter_name", fam.parameter_name}};
    return {fam.at(*in.param), std::move(desc), in.family};
}

Json to_json(const BoundReport &r) {
    return Json{{"theorem", to_string(r.theorem)},
                {"n_qubits", r.n_qubits},
                {"pair_sum", round_significant(r.pair_sum)},
                {"coefficient", round_significant(r.coefficient)},
                {"bound_on_C2", round_significant(r.bound_on_C2)},
                {"bound_on_C", round_significant(r.bound_on_C)}};
}

Json to_json(const WitnessVerdict &v) {
    return Json{{"n_parties", v.n_parties},
                {"local_dim", v.local_dim},
                {"k", v.k},
                {"threshold", round_significant(v.threshold)},
                {"certified_lower_bound_on_C", round_significant(v.certified_lower_bound_on_C)},
                {"source", to_string(v.source)},
                {"detected", v.detected}};
}

Json to_json(const PairwiseConcurrenceTable &t) {
    Json arr = Json::array();
    for (const auto &e : t.entries()) {
        arr.push_back(Json{{"i", e.i}, {"j", e.j}, {"value", round_significant(e.value)}});
    }
    return arr;
}

Table pair_table(const PairwiseConcurrenceTable &t) {
    Table out{"pairwise concurrence", {"i", "j", "C_ij"}, {}};
    for (const auto &e : t.entries()) {
        out.rows.push_back({std::to_string(e.i), std::to_string(e.j), format_number(e.value)});
    }
    return out;
}

std::string pair_label(int i, int j) {
    return "C" + std::to_string(i) + std::to_string(j);
}

std::vector<BoundSource> default_sources(const DensityMatrix &rho, const std::optional<Family> &family) {
    const int n = rho.n_qubits();
    std::vector<BoundSource> out;
    if (theorem_applies(Theorem::T1, n)) out.push_back(BoundSource::THEOREM1);
    if (theorem_applies(Theorem::T2, n)) out.push_back(BoundSource::THEOREM2);
    if (theorem_applies(Theorem::T3, n)) out.push_back(BoundSource::THEOREM3);
    if (family == Family::GHZ_NOISE) out.push_back(BoundSource::GHZ_EXACT);
    return out;
}

}  // namespace

CommandOutcome cmd_bound(const InputSpec &input) {
    ResolvedInput in = resolve(input);
    const BoundSet set = best_bound(in.rho);
    std::vector<BoundReport> reports = set.reports;
    if (in.family == Family::GHZ_NOISE) {
        reports.push_back(ghz_noise_exact_report(in.rho.n_qubits(), *input.param));
    }

    CommandOutcome out;
    out.report.tables.push_back(pair_table(set.table));
    Table bounds{"concurrence lower bounds",
                 {"theorem", "n_qubits", "pair_sum", "coefficient", "bound_on_C2", "bound_on_C"},
                 {}};
    Json json_reports = Json::array();
    for (const auto &r : reports) {
        bounds.rows.push_back({std::string(to_string(r.theorem)), std::to_string(r.n_qubits), format_number(r.pair_sum),
                               format_number(r.coefficient), format_number(r.bound_on_C2),
                               format_number(r.bound_on_C)});
        json_reports.push_back(to_json(r));
    }
    out.report.tables.push_back(std::move(bounds));
    out.report.tables.push_back(Table{"summary",
                                      {"best", "t3_dominates_t2"},
                                      {{std::string(to_string(set.best().theorem)),
                                        set.t3_dominates_t2 ? "true" : "false"}}});

    auto &j = out.report.json;
    j["command"] = "bound";
    j["input"] = std::move(in.description);
    j["n_qubits"] = in.rho.n_qubits();
    j["pairwise"] = to_json(set.table);
    j["bounds"] = std::move(json_reports);
    j["best"] = to_string(set.best().theorem);
    j["t3_dominates_t2"] = set.t3_dominates_t2;
    return out;
}

CommandOutcome cmd_witness(const InputSpec &input, const WitnessOptions &options) {
    ResolvedInput in = resolve(input);
    const int n = in.rho.n_qubits();
    std::vector<int> ks = options.ks;
    if (ks.empty()) {
        for (int k = 2; k <= n; ++k) {
            ks.push_back(k);
        }
    }
    std::vector<BoundSource> sources = options.sources.empty() ? default_sources(in.rho, in.family) : options.sources;
    if (sources.empty()) {
        throw Error(ErrorKind::UnsupportedSource,
                    "no lower-bound source applies to " + std::to_string(n) + " qubits; pass --source");
    }

    CommandOutcome out;
    Table table{"k-nonseparability verdicts",
                {"k", "source", "threshold", "certified_lower_bound_on_C", "detected"},
                {}};
    Json verdicts = Json::array();
    bool any_detected = false;
    for (const BoundSource source : sources) {
        // The bound does not depend on k; evaluate it once.
        const double lb = certified_lower_bound(in.rho, source, options.user_value);
        for (const int k : ks) {
            WitnessVerdict v;
            v.n_parties = n;
            v.local_dim = 2;
            v.k = k;
            v.source = source;
            v.threshold = k_nonsep_threshold(n, 2, k);
            v.certified_lower_bound_on_C = lb;
            v.detected = lb > v.threshold;
            any_detected = any_detected || v.detected;
            table.rows.push_back({std::to_string(k), std::string(to_string(source)), format_number(v.threshold),
                                  format_number(lb), v.detected ? "yes" : "no"});
            verdicts.push_back(to_json(v));
        }
    }
    out.report.tables.push_back(std::move(table));
    auto &j = out.report.json;
    j["command"] = "witness";
    j["input"] = std::move(in.description);
    j["verdicts"] = std::move(verdicts);
    if (options.require_detection && !any_detected) {
        out.exit_code = kExitNoDetection;
    }
    return out;
}

CommandOutcome cmd_sweep(const SweepSpec &spec, unsigned workers) {
    const NoisyFamily fam = make_family(spec.family, spec.n_qubits);
    const int n = spec.n_qubits;
    const std::vector<BoundSource> sources =
        spec.sources.empty() ? applicable_sources(spec.family, n) : spec.sources;
    if (sources.empty()) {
        throw Error(ErrorKind::UnsupportedSource, "no lower-bound source applies to " + std::to_string(n) + " qubits");
    }
    std::optional<double> threshold;
    if (spec.k) {
        threshold = k_nonsep_threshold(n, 2, *spec.k);
    }

    struct Row {
        double x = 0;
        std::vector<double> pairs;
        std::vector<double> bounds;
    };
    std::vector<Row> rows(static_cast<std::size_t>(spec.grid.steps));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (int i = next++; i < spec.grid.steps; i = next++) {
            try {
                Row r;
                r.x = spec.grid.at(i);
                const PairwiseConcurrenceTable table = pairwise_table(fam.at(r.x));
                for (const auto &e : table.entries()) {
                    r.pairs.push_back(e.value);
                }
                for (const BoundSource s : sources) {
                    r.bounds.push_back(family_lower_bound(fam, r.x, s));
                }
                rows[static_cast<std::size_t>(i)] = std::move(r);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(spec.grid.steps));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) {
            pool.emplace_back(work);
        }
        work();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    const PairwiseConcurrenceTable layout(n);
    Table table{"sweep", {fam.parameter_name}, {}};
    for (const auto &e : layout.entries()) {
        table.columns.push_back(pair_label(e.i, e.j));
    }
    for (const BoundSource s : sources) {
        table.columns.push_back("C_lb_" + std::string(to_string(s)));
    }
    if (threshold) {
        table.columns.push_back("threshold");
        for (const BoundSource s : sources) {
            table.columns.push_back("detected_" + std::string(to_string(s)));
        }
    }
    Json json_rows = Json::array();
    for (const Row &r : rows) {
        std::vector<std::string> cells{format_number(r.x)};
        Json jr{{"param", round_significant(r.x)}};
        Json jp = Json::array();
        for (std::size_t p = 0; p < r.pairs.size(); ++p) {
            cells.push_back(format_number(r.pairs[p]));
            const auto &e = layout.entries()[p];
            jp.push_back(Json{{"i", e.i}, {"j", e.j}, {"value", round_significant(r.pairs[p])}});
        }
        jr["pairwise"] = std::move(jp);
        Json jb = Json::array();
        for (std::size_t s = 0; s < sources.size(); ++s) {
            cells.push_back(format_number(r.bounds[s]));
            Json entry{{"source", to_string(sources[s])}, {"bound_on_C", round_significant(r.bounds[s])}};
            if (threshold) {
                entry["detected"] = r.bounds[s] > *threshold;
            }
            jb.push_back(std::move(entry));
        }
        jr["bounds"] = std::move(jb);
        if (threshold) {
            cells.push_back(format_number(*threshold));
            for (std::size_t s = 0; s < sources.size(); ++s) {
                cells.push_back(r.bounds[s] > *threshold ? "yes" : "no");
            }
        }
        table.rows.push_back(std::move(cells));
        json_rows.push_back(std::move(jr));
    }

    std::vector<DetectionGoal> goals{DetectionGoal::entanglement()};
    if (spec.k) {
        goals.push_back(DetectionGoal::k_nonseparable(*spec.k));
    }
    Table crossings{"crossings", {"goal", "source", "threshold", "crossing"}, {}};
    Json json_crossings = Json::array();
    for (const auto &goal : goals) {
        for (const BoundSource s : sources) {
            const auto x = detection_threshold(fam, goal, s);
            crossings.rows.push_back({goal.label(), std::string(to_string(s)), format_number(goal.threshold(n)),
                                      x ? format_number(*x) : "none"});
            json_crossings.push_back(Json{{"goal", goal.label()},
                                          {"source", to_string(s)},
                                          {"threshold", round_significant(goal.threshold(n))},
                                          {"crossing", x ? Json(round_significant(*x)) : Json(nullptr)}});
        }
    }

    CommandOutcome out;
    out.report.tables.push_back(std::move(table));
    out.report.tables.push_back(std::move(crossings));
    auto &j = out.report.json;
    j["command"] = "sweep";
    j["family"] = family_name(spec.family);
    j["n_qubits"] = n;
    j["parameter_name"] = fam.parameter_name;
    if (spec.k) {
        j["k"] = *spec.k;
        j["threshold"] = round_significant(*threshold);
    }
    j["rows"] = std::move(json_rows);
    j["crossings"] = std::move(json_crossings);
    return out;
}

CommandOutcome cmd_reproduce(const std::vector<int> &examples, std::uint64_t seed) {
    std::vector<int> which = examples;
    if (which.empty()) {
        which = {1, 2, 3, 4, 5, 6};
    }
    CommandOutcome out;
    Table table{"reproduction", {"example", "quantity", "computed", "relation", "expected", "tolerance", "status"}, {}};
    Json lines = Json::array();
    bool all_pass = true;
    for (const int ex : which) {
        for (const CheckLine &c : reproduce_example(ex, seed)) {
            all_pass = all_pass && c.pass;
            table.rows.push_back({std::to_string(c.example), c.quantity, format_number(c.computed),
                                  relation_symbol(c.relation), format_number(c.expected), format_number(c.tolerance),
                                  c.pass ? "PASS" : "FAIL"});
            lines.push_back(Json{{"example", c.example},
                                 {"quantity", c.quantity},
                                 {"computed", round_significant(c.computed)},
                                 {"relation", relation_symbol(c.relation)},
                                 {"expected", round_significant(c.expected)},
                                 {"tolerance", round_significant(c.tolerance)},
                                 {"pass", c.pass}});
        }
    }
    out.report.tables.push_back(std::move(table));
    auto &j = out.report.json;
    j["command"] = "reproduce";
    j["seed"] = seed;
    j["lines"] = std::move(lines);
    j["all_pass"] = all_pass;
    out.exit_code = all_pass ? kExitOk : kExitNumericalFailure;
    return out;
}

CommandOutcome cmd_threshold(const ThresholdOptions &options) {
    CommandOutcome out;
    auto &j = out.report.json;
    j["command"] = "threshold";
    const int n = options.n_qubits;
    if (!options.family) {
        if (!options.k) {
            throw Error(ErrorKind::ParseError, "threshold needs --k (or --family to solve a crossing)");
        }
        const double value = k_nonsep_threshold(n, options.local_dim, *options.k, options.min_block_size);
        out.report.tables.push_back(Table{"k-nonseparability threshold",
                                          {"n", "d", "k", "threshold"},
                                          {{std::to_string(n), std::to_string(options.local_dim),
                                            std::to_string(*options.k), format_number(value)}}});
        j["n_parties"] = n;
        j["local_dim"] = options.local_dim;
        j["k"] = *options.k;
        if (options.min_block_size) {
            j["min_block_size"] = *options.min_block_size;
        }
        j["threshold"] = round_significant(value);
        return out;
    }
    if (options.local_dim != 2) {
        throw Error(ErrorKind::ParameterOutOfRange, "families are qubit states; --d must be 2");
    }
    const NoisyFamily fam = make_family(*options.family, n);
    const DetectionGoal goal = options.k ? DetectionGoal::k_nonseparable(*options.k) : DetectionGoal::entanglement();
    const std::vector<BoundSource> sources =
        options.sources.empty() ? applicable_sources(*options.family, n) : options.sources;
    Table table{"detection crossings", {"goal", "source", "threshold", "crossing"}, {}};
    Json crossings = Json::array();
    for (const BoundSource s : sources) {
        const auto x = detection_threshold(fam, goal, s);
        table.rows.push_back({goal.label(), std::string(to_string(s)), format_number(goal.threshold(n)),
                              x ? format_number(*x) : "none"});
        crossings.push_back(Json{{"goal", goal.label()},
                                 {"source", to_string(s)},
                                 {"threshold", round_significant(goal.threshold(n))},
                                 {"crossing", x ? Json(round_significant(*x)) : Json(nullptr)}});
    }
    out.report.tables.push_back(std::move(table));
    j["family"] = family_name(*options.family);
    j["n_qubits"] = n;
    j["crossings"] = std::move(crossings);
    return out;
}

}  // namespace mqc::cli
