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

#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cteleport {

using Amplitude = std::complex<double>;

/// Identifies one qubit (particle) of a register. Labels are unique within a register.
struct QubitLabel {
    int id = 0;

    friend constexpr auto operator<=>(QubitLabel, QubitLabel) = default;
};

inline constexpr std::size_t kMaxQubits = 8;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kFidelityTolerance = 1e-10;

/// Raised when a state would have to be normalized from (numerically) zero,
/// i.e. a measurement branch that cannot occur was requested.
class ImpossibleBranch : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

namespace detail {
struct StateAccess;
}

/// Normalized pure state over an ordered list of labeled qubits.
///
/// Amplitudes are stored densely. The first label is the most significant bit
/// of the basis index, so for labels [3,4,5,6] the ket |0011> sits at index 3.
/// Values are immutable; every operation returns a new state.
class StateVector {
   public:
    /// Validates label uniqueness, size 2^n with n <= kMaxQubits, finiteness,
    /// and unit norm within kNormTolerance. A register with no labels holds a
    /// single unit-modulus amplitude.
    static StateVector from_amplitudes(std::vector<QubitLabel> labels, std::vector<Amplitude> amps);

    std::span<const QubitLabel> labels() const { return labels_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::size_t num_qubits() const { return labels_.size(); }
    std::size_t dimension() const { return amps_.size(); }
    Amplitude operator[](std::size_t index) const { return amps_[index]; }

    bool contains(QubitLabel q) const;
    /// Position of q within labels(); throws std::invalid_argument if absent.
    std::size_t position(QubitLabel q) const;
    /// Basis-index bit belonging to q.
    std::size_t bit_mask(QubitLabel q) const;

    /// Multiplies every amplitude by e^{i theta}.
    StateVector with_global_phase(double theta) const;

    /// Amplitudes rotated so the first nonzero one is real and positive. Display only.
    std::vector<Amplitude> phase_canonical_amplitudes() const;

    std::string to_string(int precision = 6) const;

   private:
    friend struct detail::StateAccess;
    StateVector(std::vector<QubitLabel> labels, std::vector<Amplitude> amps)
        : labels_(std::move(labels)), amps_(std::move(amps)) {}

    std::vector<QubitLabel> labels_;
    std::vector<Amplitude> amps_;
};

namespace detail {
/// Construction path for kernels that preserve the norm by construction.
struct StateAccess {
    static StateVector adopt(std::vector<QubitLabel> labels, std::vector<Amplitude> amps) {
        return StateVector(std::move(labels), std::move(amps));
    }
};

void check_labels(std::span<const QubitLabel> labels);
}  // namespace detail

double squared_norm(std::span<const Amplitude> amps);

StateVector basis_state(std::vector<QubitLabel> labels, std::span<const int> bits);
StateVector basis_state(std::vector<QubitLabel> labels, std::initializer_list<int> bits);

/// Labels of a followed by labels of b; amplitude (i, j) = a[i] * b[j].
StateVector tensor(const StateVector& a, const StateVector& b);

/// sum_i conj(a_i) b_i. Both states must carry identical label lists in the same order.
Amplitude inner(const StateVector& a, const StateVector& b);

/// |<a|b>|^2. Label lists must match as sets; b is permuted into a's order first.
double fidelity(const StateVector& a, const StateVector& b);

/// Rescales raw amplitudes to unit norm. Throws ImpossibleBranch when the norm is <= kNormTolerance.
StateVector normalize(std::vector<QubitLabel> labels, std::vector<Amplitude> amps);

/// Same state with its qubits listed in `order` (a permutation of s.labels()).
StateVector permute(const StateVector& s, std::span<const QubitLabel> order);

/// Renames qubits. Every (from, to) pair must name a qubit of s; the result must stay unique.
StateVector relabel(const StateVector& s, std::span<const std::pair<QubitLabel, QubitLabel>> mapping);

}  // namespace cteleport
