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

#include "app.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mqc/error.hpp"

namespace mqc::cli {

namespace {

Family to_family(const std::string &name) {
    if (auto f = parse_family(name)) {
        return *f;
    }
    throw Error(ErrorKind::ParseError, "unknown family '" + name + "' (w-noise, dicke-noise, ex3, ex4, ghz-noise)");
}

std::vector<BoundSource> to_sources(const std::vector<std::string> &names) {
    std::vector<BoundSource> out;
    for (const auto &s : names) {
        const auto src = parse_bound_source(s);
        if (!src) {
            throw Error(ErrorKind::ParseError, "unknown --source '" + s + "' (t1, t2, t3, ghz-exact, pure-exact, user)");
        }
        out.push_back(*src);
    }
    return out;
}

struct CommonFlags {
    std::string format = "table";
    std::string out_path;
};

void add_common(CLI::App *sub, CommonFlags &flags) {
    sub->add_option("--format", flags.format, "table, csv or json")->capture_default_str();
    sub->add_option("--out", flags.out_path, "write the report to this file instead of standard output");
}

void add_input(CLI::App *sub, InputSpec &input, std::string &family) {
    sub->add_option("--family", family, "w-noise, dicke-noise, ex3, ex4 or ghz-noise");
    sub->add_option("--n", input.n_qubits, "number of qubits for --family")->capture_default_str();
    sub->add_option("--param", input.param, "mixing parameter in [0, 1] for --family");
    sub->add_flag("--repair", input.repair, "clamp tiny negative eigenvalues of a --state matrix and renormalize");
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Lower bounds on multiqubit concurrence and k-nonseparability witnesses", "mqc"};
    app.require_subcommand(1);

    CommonFlags common;
    InputSpec input;
    std::string state_file;
    std::string family;
    std::vector<int> ks;
    std::vector<std::string> source_names;
    std::optional<double> user_value;
    bool require_detection = false;
    std::string grid_text = "0:1:101";
    std::uint64_t seed = 20240601;
    std::vector<int> examples;
    int local_dim = 2;
    std::optional<int> block;
    unsigned workers = 0;

    auto *bound = app.add_subcommand("bound", "pairwise concurrences and every applicable lower bound");
    add_common(bound, common);
    add_input(bound, input, family);
    bound->add_option("--state", state_file, "density matrix file (json or csv)");

    auto *witness = app.add_subcommand("witness", "k-nonseparability verdicts");
    add_common(witness, common);
    add_input(witness, input, family);
    witness->add_option("--state", state_file, "density matrix file (json or csv)");
    witness->add_option("--k", ks, "k to test; repeatable (default 2..N)");
    witness->add_option("--source", source_names, "t1, t2, t3, ghz-exact, pure-exact or user; repeatable");
    witness->add_option("--value", user_value, "certified lower bound on C for --source user");
    witness->add_flag("--require-detection", require_detection, "exit 1 unless some verdict detects");

    auto *sweep = app.add_subcommand("sweep", "evaluate a family over a parameter grid");
    add_common(sweep, common);
    sweep->add_option("--family", family, "w-noise, dicke-noise, ex3, ex4 or ghz-noise")->required();
    sweep->add_option("--n", input.n_qubits, "number of qubits")->capture_default_str();
    sweep->add_option("--grid", grid_text, "start:stop:steps")->capture_default_str();
    sweep->add_option("--k", ks, "k for detection columns")->expected(0, 1);
    sweep->add_option("--source", source_names, "bound source; repeatable");
    sweep->add_option("--workers", workers, "worker threads (default: hardware concurrency)");

    auto *reproduce = app.add_subcommand("reproduce", "recompute the worked examples and compare with reference values");
    add_common(reproduce, common);
    reproduce->add_option("example", examples, "example numbers 1..6 (default all)")->check(CLI::Range(1, 6));
    reproduce->add_option("--seed", seed, "seed for the sampled soundness checks")->capture_default_str();

    auto *threshold = app.add_subcommand("threshold", "k-nonseparability threshold or a family's detection crossing");
    add_common(threshold, common);
    threshold->add_option("--family", family, "solve the crossing parameter for this family");
    threshold->add_option("--n", input.n_qubits, "number of parties")->capture_default_str();
    threshold->add_option("--d", local_dim, "local dimension")->capture_default_str();
    threshold->add_option("--k", ks, "k (with --family: omit for plain entanglement)")->expected(0, 1);
    threshold->add_option("--block", block, "smallest block size allowed in a k-partition");
    threshold->add_option("--source", source_names, "bound source; repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "mqc: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        const auto format = parse_format(common.format);
        if (!format) {
            throw Error(ErrorKind::ParseError, "unknown --format '" + common.format + "' (table, csv, json)");
        }
        if (!state_file.empty()) {
            input.state_file = state_file;
        }
        if (!family.empty()) {
            input.family = to_family(family);
        }
        const auto sources = to_sources(source_names);

        CommandOutcome outcome;
        if (*bound) {
            outcome = cmd_bound(input);
        } else if (*witness) {
            outcome = cmd_witness(input, WitnessOptions{ks, sources, user_value, require_detection});
        } else if (*sweep) {
            SweepSpec spec;
            spec.family = *input.family;
            spec.n_qubits = input.n_qubits;
            spec.grid = parse_grid(grid_text);
            if (!ks.empty()) {
                spec.k = ks.front();
            }
            spec.sources = sources;
            outcome = cmd_sweep(spec, workers);
        } else if (*reproduce) {
            outcome = cmd_reproduce(examples, seed);
        } else {
            ThresholdOptions opts;
            opts.family = input.family;
            opts.n_qubits = input.n_qubits;
            opts.local_dim = local_dim;
            if (!ks.empty()) {
                opts.k = ks.front();
            }
            opts.min_block_size = block;
            opts.sources = sources;
            outcome = cmd_threshold(opts);
        }

        if (common.out_path.empty()) {
            render(out, outcome.report, *format);
        } else {
            std::ofstream file(common.out_path, std::ios::binary);
            if (!file) {
                throw Error(ErrorKind::ParseError, "cannot open '" + common.out_path + "' for writing");
            }
            render(file, outcome.report, *format);
        }
        return outcome.exit_code;
    } catch (const Error &e) {
        err << "mqc: " << e.what() << '\n';
        return e.is_input_error() ? kExitInputError : kExitNumericalFailure;
    } catch (const std::exception &e) {
        err << "mqc: internal error: " << e.what() << '\n';
        return kExitNumericalFailure;
    }
}

int run(int argc, const char *const *argv) {
    return run(argc, argv, std::cout, std::cerr);
}

}  // namespace mqc::cli
