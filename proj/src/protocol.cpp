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

#include "cteleport/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cteleport {

using namespace qubits;

namespace {

void check_normalized(std::span<const Amplitude> c) {
    for (const auto& a : c) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("input coefficients must be finite");
        }
    }
    const double n2 = squared_norm(c);
    if (std::abs(n2 - 1.0) > kCoefficientTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "input coefficients are not normalized: sum of squared moduli is " << n2;
        throw std::invalid_argument(msg.str());
    }
}

std::size_t outcome_index(BellOutcome o) { return static_cast<std::size_t>(o); }

CorrectionOp paulis(const char* spec, bool cz) {
    return CorrectionOp{cz, pauli_from_char(spec[0]), pauli_from_char(spec[1])};
}

// Scheme One receiver operations, [o13][o26], as tabulated. Empty second slot: single entry.
constexpr const char* kSchemeOneTable[4][4][2] = {
    // o13 = Phi+
    {{"IZ", "ZI"}, {"II", ""}, {"IX", ""}, {"IY", "ZX"}},
    // o13 = Phi-
    {{"II", ""}, {"IZ", "ZI"}, {"IY", "ZX"}, {"IX", ""}},
    // o13 = Psi+
    {{"XI", ""}, {"XZ", "YI"}, {"XY", "YX"}, {"XX", ""}},
    // o13 = Psi-
    {{"XZ", "YI"}, {"XI", ""}, {"XX", ""}, {"XY", "YX"}},
};

// Scheme Two: the Pauli on 4 follows o13 and the Pauli on 5 follows o26.
constexpr char kSchemeTwoPauli[4] = {'I', 'Z', 'X', 'Y'};

}  // namespace

InputState InputState::scheme1(Amplitude alpha, Amplitude delta) {
    const std::array<Amplitude, 2> c{alpha, delta};
    check_normalized(c);
    return InputState(Scheme::One, {alpha, 0.0, 0.0, delta});
}

InputState InputState::scheme2(Amplitude alpha, Amplitude beta, Amplitude gamma, Amplitude delta) {
    const std::array<Amplitude, 4> c{alpha, beta, gamma, delta};
    check_normalized(c);
    return InputState(Scheme::Two, c);
}

InputState InputState::from_coefficients(Scheme scheme, std::span<const Amplitude> coeffs) {
    const std::size_t want = scheme == Scheme::One ? 2 : 4;
    if (coeffs.size() != want) {
        throw std::invalid_argument("scheme " + std::to_string(static_cast<int>(scheme)) + " takes " +
                                    std::to_string(want) + " coefficients, got " + std::to_string(coeffs.size()));
    }
    if (scheme == Scheme::One) return scheme1(coeffs[0], coeffs[1]);
    return scheme2(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
}

InputState InputState::random(Scheme scheme, RandomStream& rng) {
    const std::size_t k = scheme == Scheme::One ? 2 : 4;
    std::vector<Amplitude> c(k);
    for (auto& a : c) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = Amplitude(re, im);
    }
    const double n = std::sqrt(squared_norm(c));
    for (auto& a : c) a /= n;
    return from_coefficients(scheme, c);
}

std::vector<Amplitude> InputState::coefficients() const {
    if (scheme_ == Scheme::One) return {c_[0], c_[3]};
    return {c_.begin(), c_.end()};
}

std::string CorrectionOp::to_string() const {
    std::string out = cz_first ? "CZ45;" : "";
    out += to_char(on4);
    out += '4';
    out += to_char(on5);
    out += '5';
    return out;
}

StateVector cluster_state() {
    std::vector<Amplitude> amps(16);
    amps[0b0000] = 0.5;
    amps[0b0011] = 0.5;
    amps[0b1100] = 0.5;
    amps[0b1111] = -0.5;
    return StateVector::from_amplitudes({kChannel3, kOutput4, kOutput5, kChannel6}, std::move(amps));
}

StateVector make_input(const InputState& input) {
    const auto& c = input.amplitudes();
    // Coefficients are only validated to kCoefficientTolerance; rescale to meet the state invariant.
    return normalize({kInput1, kInput2}, {c.begin(), c.end()});
}

StateVector teleport_target(const InputState& input) {
    const std::array<std::pair<QubitLabel, QubitLabel>, 2> move{{{kInput1, kOutput4}, {kInput2, kOutput5}}};
    return relabel(make_input(input), move);
}

StateVector assemble_total(const InputState& input) { return tensor(make_input(input), cluster_state()); }

BranchCollapse collapse(const StateVector& total, BellOutcome o13, BellOutcome o26) {
    const auto first = project_bell(total, kInput1, kChannel3, o13);
    const auto second = project_bell(first.remainder(), kInput2, kChannel6, o26);
    const StateVector& rest = second.remainder();
    if (rest.num_qubits() != 2 || rest.labels()[0] != kOutput4 || rest.labels()[1] != kOutput5) {
        throw std::logic_error("collapse: expected the register to reduce to qubits (4,5)");
    }
    return BranchCollapse{first.probability() * second.probability(), rest};
}

StateVector apply_correction(const StateVector& pair45, const CorrectionOp& op) {
    StateVector s = op.cz_first ? apply_cz(pair45, kOutput4, kOutput5) : pair45;
    s = apply_pauli(s, kOutput4, op.on4);
    return apply_pauli(s, kOutput5, op.on5);
}

TrialResult run_branch(const InputState& input, BellOutcome o13, BellOutcome o26, const CorrectionOp& op) {
    auto branch = collapse(assemble_total(input), o13, o26);
    StateVector corrected = apply_correction(branch.remainder, op);
    const double f = fidelity(teleport_target(input), corrected);
    return TrialResult{o13, o26, branch.probability, op, std::move(corrected), f};
}

TrialResult run_branch(const InputState& input, BellOutcome o13, BellOutcome o26) {
    return run_branch(input, o13, o26, table_lookup(input.scheme(), o13, o26).front());
}

std::vector<CorrectionOp> table_lookup(Scheme scheme, BellOutcome o13, BellOutcome o26) {
    const std::size_t i = outcome_index(o13);
    const std::size_t j = outcome_index(o26);
    if (scheme == Scheme::Two) {
        const char spec[2] = {kSchemeTwoPauli[i], kSchemeTwoPauli[j]};
        return {paulis(spec, true)};
    }
    std::vector<CorrectionOp> out;
    for (const char* entry : kSchemeOneTable[i][j]) {
        if (entry[0] != '\0') out.push_back(paulis(entry, false));
    }
    return out;
}

std::vector<InputState> default_probes(Scheme scheme, std::uint64_t seed) {
    std::vector<InputState> probes;
    for (std::uint64_t k = 0; k < 10; ++k) {
        RandomStream rng(seed, k);
        probes.push_back(InputState::random(scheme, rng));
    }
    if (scheme == Scheme::One) {
        probes.push_back(InputState::scheme1(1.0, 0.0));
        probes.push_back(InputState::scheme1(0.0, 1.0));
    } else {
        for (std::size_t k = 0; k < 4; ++k) {
            std::array<Amplitude, 4> c{};
            c[k] = 1.0;
            probes.push_back(InputState::from_coefficients(Scheme::Two, c));
        }
    }
    return probes;
}

namespace {

struct ProbeBranch {
    StateVector remainder;
    StateVector target;
};

std::vector<ProbeBranch> collapse_probes(BellOutcome o13, BellOutcome o26, std::span<const InputState> probes) {
    if (probes.empty()) throw std::invalid_argument("at least one probe input is required");
    std::vector<ProbeBranch> out;
    out.reserve(probes.size());
    for (const auto& p : probes) {
        out.push_back({collapse(assemble_total(p), o13, o26).remainder, teleport_target(p)});
    }
    return out;
}

double worst_fidelity(const CorrectionOp& op, std::span<const ProbeBranch> branches) {
    double worst = 1.0;
    for (const auto& b : branches) worst = std::min(worst, fidelity(b.target, apply_correction(b.remainder, op)));
    return worst;
}

}  // namespace

double min_probe_fidelity(const CorrectionOp& op, BellOutcome o13, BellOutcome o26,
                          std::span<const InputState> probes) {
    return worst_fidelity(op, collapse_probes(o13, o26, probes));
}

std::vector<ScoredCorrection> score_pauli_pairs(BellOutcome o13, BellOutcome o26, std::span<const InputState> probes,
                                                bool cz_first) {
    const auto branches = collapse_probes(o13, o26, probes);
    std::vector<ScoredCorrection> out;
    out.reserve(16);
    for (Pauli p4 : kAllPaulis) {
        for (Pauli p5 : kAllPaulis) {
            const CorrectionOp op{cz_first, p4, p5};
            out.push_back({op, worst_fidelity(op, branches)});
        }
    }
    return out;
}

std::vector<CorrectionOp> derive_corrections(Scheme scheme, BellOutcome o13, BellOutcome o26,
                                             std::span<const InputState> probes) {
    std::vector<CorrectionOp> out;
    for (const auto& scored : score_pauli_pairs(o13, o26, probes, scheme == Scheme::Two)) {
        if (scored.min_fidelity >= 1.0 - kFidelityTolerance) out.push_back(scored.op);
    }
    if (out.empty()) {
        throw std::logic_error("no Pauli correction restores branch (" + std::string(to_string(o13)) + ", " +
                               std::string(to_string(o26)) + ")");
    }
    return out;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::ExactUpToGlobalPhase:
            return "exact-up-to-global-phase";
        case Verdict::SubspaceOnly:
            return "subspace-only";
        case Verdict::Mismatch:
            return "mismatch";
    }
    return "?";
}

TableReport verify_tables(Scheme scheme, std::uint64_t probe_seed) {
    const auto probes = default_probes(scheme, probe_seed);
    const auto general = default_probes(Scheme::Two, probe_seed);
    TableReport report{scheme, {}};
    for (BellOutcome o13 : kAllBellOutcomes) {
        for (BellOutcome o26 : kAllBellOutcomes) {
            TableCell cell{o13, o26, derive_corrections(scheme, o13, o26, probes), {}, Verdict::ExactUpToGlobalPhase};
            for (const auto& op : table_lookup(scheme, o13, o26)) {
                TableEntryCheck check{op, min_probe_fidelity(op, o13, o26, probes), Verdict::Mismatch, {}, {}};
                const bool derived = std::find(cell.derived.begin(), cell.derived.end(), op) != cell.derived.end();
                if (derived) check.verdict = Verdict::ExactUpToGlobalPhase;
                if (scheme == Scheme::One) {
                    const double g = min_probe_fidelity(op, o13, o26, general);
                    check.general_min_fidelity = g;
                    check.general_verdict =
                        g >= 1.0 - kFidelityTolerance ? Verdict::ExactUpToGlobalPhase : Verdict::SubspaceOnly;
                }
                if (check.verdict == Verdict::Mismatch) cell.verdict = Verdict::Mismatch;
                cell.listed.push_back(check);
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

}  // namespace cteleport
