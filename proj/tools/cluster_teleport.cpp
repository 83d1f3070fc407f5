// Copyright 2026 The cluster-teleport Authors
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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cteleport/harness.hpp"

using namespace cteleport;

namespace {

struct Options {
    int scheme = 2;
    std::string coeffs;
    bool renormalize = false;
    std::size_t random_inputs = 100;
    std::size_t trials = 16000;
    std::uint64_t seed = 0;
    double tol = kFidelityTolerance;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--scheme", o.scheme, "Protocol: 1 (a|00>+d|11>) or 2 (arbitrary two-qubit state)")
        ->check(CLI::IsMember({1, 2}));
    cmd->add_option("--seed", o.seed, "Seed for random inputs, probes, and sampling");
    cmd->add_option("--tol", o.tol, "Fidelity tolerance: checks require fidelity >= 1 - tol");
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out, "Write the report here instead of stdout");
}

void add_inputs(CLI::App* cmd, Options& o) {
    cmd->add_option("--coeffs", o.coeffs,
                    "Comma-separated complex coefficients, e.g. 0.6,0+0.8j (use --coeffs=... for a leading minus)");
    cmd->add_flag("--renormalize", o.renormalize, "Rescale --coeffs to unit norm instead of rejecting them");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulate and verify two-qubit teleportation through a four-qubit cluster channel"};
    app.require_subcommand(1);
    Options o;

    auto* enumerate = app.add_subcommand("enumerate", "Run all 16 measurement branches");
    add_common(enumerate, o);
    add_inputs(enumerate, o);
    enumerate->add_option("--random-inputs", o.random_inputs, "Random inputs to draw when --coeffs is absent");

    auto* sample = app.add_subcommand("sample", "Seeded Monte Carlo over Bell measurement outcomes");
    add_common(sample, o);
    add_inputs(sample, o);
    sample->add_option("--trials", o.trials, "Number of protocol executions");

    auto* derive = app.add_subcommand("derive", "Brute-force the Pauli corrections for every branch");
    add_common(derive, o);

    auto* verify = app.add_subcommand("verify", "Check the correction tables against the brute-force derivation");
    add_common(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    RunConfig cfg;
    try {
        CLI::App* chosen = app.get_subcommands().front();
        cfg.mode = mode_from_string(chosen->get_name());
        cfg.scheme = o.scheme == 1 ? Scheme::One : Scheme::Two;
        if (!o.coeffs.empty()) cfg.input_coeffs = parse_coefficient_list(o.coeffs);
        cfg.renormalize = o.renormalize;
        cfg.random_inputs = o.random_inputs;
        cfg.trials = o.trials;
        cfg.seed = o.seed;
        cfg.fidelity_tol = o.tol;
        cfg.output_format = format_from_string(o.format);
        cfg.validate();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Report report = run(cfg);
    const std::string text = emit_report(report, cfg.output_format);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << o.out << " for writing\n";
            return kExitUsage;
        }
        file << text;
    }
    if (!report.passed()) {
        for (const auto& f : report.failures) std::cerr << "check failed: " << f << "\n";
    }
    return report.exit_code();
}
