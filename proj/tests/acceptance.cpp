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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cteleport/harness.hpp"

using namespace cteleport;
using namespace cteleport::qubits;

namespace {

constexpr double kFidelityFloor = 1 - 1e-10;
constexpr double kProbabilityTol = 1e-12;
constexpr double kCzGap = 1e-6;
constexpr std::size_t kRandomInputs = 100;
constexpr std::uint64_t kSeed = 0;

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<InputState> seeded_inputs(Scheme scheme, std::size_t n, std::uint64_t seed) {
    std::vector<InputState> out;
    for (std::size_t k = 0; k < n; ++k) {
        RandomStream rng(seed, k);
        out.push_back(InputState::random(scheme, rng));
    }
    return out;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Outcome perfect_fidelity() {
    double worst = 1.0;
    std::size_t cases = 0;
    for (Scheme scheme : {Scheme::One, Scheme::Two}) {
        for (const auto& in : seeded_inputs(scheme, kRandomInputs, kSeed)) {
            for (auto o13 : kAllBellOutcomes) {
                for (auto o26 : kAllBellOutcomes) {
                    worst = std::min(worst, run_branch(in, o13, o26).fidelity);
                    ++cases;
                }
            }
        }
    }
    return {worst >= kFidelityFloor, std::to_string(cases) + " branches, min fidelity 1-" + sci(1 - worst)};
}

Outcome unit_total_probability() {
    double worst_branch = 0, worst_total = 0;
    for (Scheme scheme : {Scheme::One, Scheme::Two}) {
        for (const auto& in : seeded_inputs(scheme, kRandomInputs, kSeed)) {
            double total = 0;
            for (auto o13 : kAllBellOutcomes) {
                for (auto o26 : kAllBellOutcomes) {
                    const double p = run_branch(in, o13, o26).probability;
                    worst_branch = std::max(worst_branch, std::abs(p - 1.0 / 16));
                    total += p;
                }
            }
            worst_total = std::max(worst_total, std::abs(total - 1.0));
        }
    }
    return {worst_branch <= kProbabilityTol && worst_total <= kProbabilityTol,
            "max |p-1/16| " + sci(worst_branch) + ", max |sum-1| " + sci(worst_total)};
}

Outcome table_two_equivalence() {
    const auto report = verify_tables(Scheme::Two, kSeed);
    int exact = 0, unique = 0;
    for (const auto& cell : report.cells) {
        exact += cell.verdict == Verdict::ExactUpToGlobalPhase;
        unique += cell.derived.size() == 1 && cell.listed.size() == 1 && cell.derived[0] == cell.listed[0].op;
    }
    return {exact == 16 && unique == 16,
            std::to_string(exact) + "/16 exact-up-to-global-phase, " + std::to_string(unique) + "/16 unique"};
}

Outcome table_one_equivalence() {
    const auto report = verify_tables(Scheme::One, kSeed);
    int entries = 0, good = 0, dual_subspace = 0;
    for (const auto& cell : report.cells) {
        for (const auto& e : cell.listed) {
            ++entries;
            good += e.min_fidelity >= kFidelityFloor;
        }
        const bool dual = cell.listed.size() == 2;
        const bool subspace = std::any_of(cell.listed.begin(), cell.listed.end(), [](const TableEntryCheck& e) {
            return e.general_verdict == Verdict::SubspaceOnly;
        });
        dual_subspace += dual && subspace;
    }
    return {entries == 24 && good == entries && dual_subspace >= 1,
            std::to_string(good) + "/" + std::to_string(entries) + " listed entries exact on the a|00>+d|11> support, " +
                std::to_string(dual_subspace) + " dual-entry cells subspace-only on general inputs"};
}

Outcome worked_examples() {
    double worst_one = 1.0, worst_two = 1.0;
    for (const auto& in : seeded_inputs(Scheme::One, 20, kSeed + 1)) {
        auto branch = collapse(assemble_total(in), BellOutcome::PhiPlus, BellOutcome::PhiPlus);
        auto want = normalize({kOutput4, kOutput5}, {in.alpha(), 0.0, 0.0, -in.delta()});
        worst_one = std::min(worst_one, fidelity(branch.remainder, want));
    }
    for (const auto& in : seeded_inputs(Scheme::Two, 20, kSeed + 1)) {
        auto branch = collapse(assemble_total(in), BellOutcome::PhiPlus, BellOutcome::PhiMinus);
        auto post = apply_cz(branch.remainder, kOutput4, kOutput5);
        auto want = normalize({kOutput4, kOutput5}, {in.alpha(), -in.beta(), in.gamma(), -in.delta()});
        worst_two = std::min(worst_two, fidelity(post, want));
    }
    return {worst_one >= kFidelityFloor && worst_two >= kFidelityFloor,
            "scheme 1 (Phi+,Phi+) min 1-" + sci(1 - worst_one) + ", scheme 2 (Phi+,Phi-) post-CZ min 1-" +
                sci(1 - worst_two)};
}

Outcome cz_necessity() {
    // Every all-nonzero input, used as its own probe, must leave some branch unrepairable without CZ.
    std::size_t holds = 0, tried = 0;
    double largest_gap = 0;
    for (const auto& in : seeded_inputs(Scheme::Two, kRandomInputs, kSeed + 2)) {
        const auto& c = in.amplitudes();
        if (std::any_of(c.begin(), c.end(), [](Amplitude a) { return std::abs(a) < 1e-3; })) continue;
        ++tried;
        const std::vector<InputState> probe{in};
        double worst_best = 1.0;
        for (auto o13 : kAllBellOutcomes) {
            for (auto o26 : kAllBellOutcomes) {
                double best = 0;
                for (const auto& s : score_pauli_pairs(o13, o26, probe, false)) best = std::max(best, s.min_fidelity);
                worst_best = std::min(worst_best, best);
            }
        }
        largest_gap = std::max(largest_gap, 1 - worst_best);
        holds += worst_best < 1 - kCzGap;
    }
    return {tried > 0 && holds == tried,
            std::to_string(holds) + "/" + std::to_string(tried) +
                " inputs have a branch with best no-CZ Pauli fidelity < 1-1e-6"};
}

Outcome montecarlo_statistics() {
    RunConfig cfg;
    cfg.mode = Mode::Sample;
    cfg.scheme = Scheme::Two;
    cfg.trials = 16000;
    cfg.seed = kSeed;
    const auto start = std::chrono::steady_clock::now();
    const Report r = run(cfg);
    const std::string first = emit_report(r, OutputFormat::Json);
    const std::string second = emit_report(run(cfg), OutputFormat::Json);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / 2;
    int inside = 0;
    double worst_z = 0;
    for (const auto& f : r.aggregates.frequencies) {
        inside += f.within_3sigma;
        worst_z = std::max(worst_z, std::abs(f.frequency - f.expected) / f.sigma);
    }
    std::ostringstream detail;
    detail.precision(3);
    detail << inside << "/16 within 3 sigma (max |z| " << worst_z << "), byte-identical rerun: "
           << (first == second ? "yes" : "no") << ", " << seconds << " s per run";
    return {inside == 16 && first == second && r.passed() && seconds < 2.0, detail.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"AC1 perfect fidelity, 100 inputs x 16 branches per scheme", 1.0, perfect_fidelity},
        {"AC2 branch probability 1/16, total 1", 0, unit_total_probability},
        {"AC3 scheme 2 table equals brute-force derivation", 1.0, table_two_equivalence},
        {"AC4 scheme 1 table entries exact on support", 0, table_one_equivalence},
        {"AC5 worked-example branch states", 0, worked_examples},
        {"AC6 CZ step is necessary for scheme 2", 0, cz_necessity},
        {"AC7 16000-trial Monte Carlo statistics", 0, montecarlo_statistics},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
            o.pass = false;
            o.detail += " (over " + std::to_string(c.budget_seconds) + " s budget)";
        }
        failed += !o.pass;
        std::printf("[%s] %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), seconds);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
