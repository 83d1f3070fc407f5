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

// Two-qubit teleportation through the four-qubit cluster channel
//
//     (|0000> + |0011> + |1100> - |1111>)/2   on qubits 3,4,5,6.
//
// The sender holds the input pair (1,2) and channel qubits 3 and 6, measures
// (1,3) and then (2,6) in the Bell basis, and the receiver repairs pair (4,5)
// from the two outcomes. Scheme One teleports a|00> + d|11>; Scheme Two
// teleports an arbitrary two-qubit state and needs a CZ(4,5) before the Paulis.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cteleport/gates.hpp"
#include "cteleport/measurement.hpp"
#include "cteleport/statevec.hpp"

namespace cteleport {

enum class Scheme : std::uint8_t { One = 1, Two = 2 };

namespace qubits {
inline constexpr QubitLabel kInput1{1};
inline constexpr QubitLabel kInput2{2};
inline constexpr QubitLabel kChannel3{3};
inline constexpr QubitLabel kOutput4{4};
inline constexpr QubitLabel kOutput5{5};
inline constexpr QubitLabel kChannel6{6};
}  // namespace qubits

/// Normalization slack accepted for caller-supplied coefficients.
inline constexpr double kCoefficientTolerance = 1e-9;

/// Coefficients of the state to teleport. Scheme One only carries (alpha, delta);
/// beta and gamma read as zero.
class InputState {
   public:
    static InputState scheme1(Amplitude alpha, Amplitude delta);
    static InputState scheme2(Amplitude alpha, Amplitude beta, Amplitude gamma, Amplitude delta);
    /// Dispatches on scheme; coeffs has 2 entries for One and 4 for Two.
    static InputState from_coefficients(Scheme scheme, std::span<const Amplitude> coeffs);
    /// Complex Gaussian draw, normalized.
    static InputState random(Scheme scheme, RandomStream& rng);

    Scheme scheme() const { return scheme_; }
    Amplitude alpha() const { return c_[0]; }
    Amplitude beta() const { return c_[1]; }
    Amplitude gamma() const { return c_[2]; }
    Amplitude delta() const { return c_[3]; }
    /// Amplitudes over |00>, |01>, |10>, |11>.
    const std::array<Amplitude, 4>& amplitudes() const { return c_; }
    /// The coefficients the scheme actually parameterizes: (a, d) or (a, b, g, d).
    std::vector<Amplitude> coefficients() const;

   private:
    InputState(Scheme scheme, std::array<Amplitude, 4> c) : scheme_(scheme), c_(c) {}
    Scheme scheme_;
    std::array<Amplitude, 4> c_;
};

/// Receiver's feed-forward: optional CZ(4,5) followed by one Pauli on each of 4 and 5.
struct CorrectionOp {
    bool cz_first = false;
    Pauli on4 = Pauli::I;
    Pauli on5 = Pauli::I;

    friend bool operator==(const CorrectionOp&, const CorrectionOp&) = default;
    /// "X4Y5", or "CZ45;X4Y5" when cz_first.
    std::string to_string() const;
};

struct TrialResult {
    BellOutcome outcome13;
    BellOutcome outcome26;
    double probability;
    CorrectionOp correction;
    StateVector corrected_state;  // labels (4,5)
    double fidelity;
};

/// Joint probability of a Bell outcome pair and the uncorrected pair (4,5).
struct BranchCollapse {
    double probability;
    StateVector remainder;  // labels (4,5)
};

StateVector cluster_state();
StateVector make_input(const InputState& input);
/// make_input(input) moved onto the output pair: 1 -> 4, 2 -> 5.
StateVector teleport_target(const InputState& input);
StateVector assemble_total(const InputState& input);

/// Measures (1,3) then (2,6) on the total state. Throws ImpossibleBranch on a zero-probability pair.
BranchCollapse collapse(const StateVector& total, BellOutcome o13, BellOutcome o26);
StateVector apply_correction(const StateVector& pair45, const CorrectionOp& op);

/// Executes one branch end to end with the first table correction.
TrialResult run_branch(const InputState& input, BellOutcome o13, BellOutcome o26);
/// Same, with an explicit correction.
TrialResult run_branch(const InputState& input, BellOutcome o13, BellOutcome o26, const CorrectionOp& op);

/// The receiver's operation(s) as tabulated for the scheme; two entries where alternatives are listed.
std::vector<CorrectionOp> table_lookup(Scheme scheme, BellOutcome o13, BellOutcome o26);

/// 10 random inputs drawn from `seed` followed by the single-coefficient inputs.
std::vector<InputState> default_probes(Scheme scheme, std::uint64_t seed = 0);

/// Worst fidelity of `op` over the probes for the given outcome pair.
double min_probe_fidelity(const CorrectionOp& op, BellOutcome o13, BellOutcome o26,
                          std::span<const InputState> probes);

struct ScoredCorrection {
    CorrectionOp op;
    double min_fidelity;
};

/// All 16 Pauli pairs (CZ step as given) scored by min_probe_fidelity, in I,X,Y,Z x I,X,Y,Z order.
std::vector<ScoredCorrection> score_pauli_pairs(BellOutcome o13, BellOutcome o26, std::span<const InputState> probes,
                                                bool cz_first);

/// Brute-force search: every Pauli pair (CZ step fixed by scheme) that restores all probes
/// to fidelity >= 1 - kFidelityTolerance. Throws std::logic_error if none does.
std::vector<CorrectionOp> derive_corrections(Scheme scheme, BellOutcome o13, BellOutcome o26,
                                             std::span<const InputState> probes);

enum class Verdict : std::uint8_t { ExactUpToGlobalPhase, SubspaceOnly, Mismatch };
std::string_view to_string(Verdict v);

struct TableEntryCheck {
    CorrectionOp op;
    double min_fidelity;  // over the scheme's own probes
    Verdict verdict;      // exact or mismatch on the scheme's own probes
    /// Scheme One only: fidelity on arbitrary two-qubit probes and the resulting
    /// verdict (exact or subspace-only).
    std::optional<double> general_min_fidelity;
    std::optional<Verdict> general_verdict;
};

struct TableCell {
    BellOutcome outcome13;
    BellOutcome outcome26;
    std::vector<CorrectionOp> derived;
    std::vector<TableEntryCheck> listed;
    Verdict verdict;  // worst verdict of the listed entries on the scheme's own probes
};

struct TableReport {
    Scheme scheme;
    std::vector<TableCell> cells;  // 16, o13-major
};

TableReport verify_tables(Scheme scheme, std::uint64_t probe_seed = 0);

}  // namespace cteleport
