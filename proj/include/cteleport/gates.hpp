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

#include <array>
#include <cstdint>

#include "cteleport/statevec.hpp"

namespace cteleport {

enum class Pauli : std::uint8_t { I, X, Y, Z };

inline constexpr std::array<Pauli, 4> kAllPaulis = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

char to_char(Pauli p);
/// Accepts I, X, Y, Z (either case).
Pauli pauli_from_char(char c);

/// 2x2 unitary acting on one qubit. Unitarity is checked (to 1e-10) on construction.
class SingleQubitUnitary {
   public:
    static constexpr double kUnitarityTolerance = 1e-10;

    /// Row-major entries {u00, u01, u10, u11}.
    explicit SingleQubitUnitary(std::array<Amplitude, 4> entries);

    Amplitude operator()(std::size_t row, std::size_t col) const { return m_[row * 2 + col]; }
    const std::array<Amplitude, 4>& entries() const { return m_; }

    SingleQubitUnitary adjoint() const;
    SingleQubitUnitary operator*(const SingleQubitUnitary& rhs) const;

   private:
    std::array<Amplitude, 4> m_;
};

/// Max entry-wise deviation of U^dagger U from the identity.
double unitarity_error(const std::array<Amplitude, 4>& entries);

/// I, X, Z as usual; Y is sigma_y = [[0, -i], [i, 0]].
const SingleQubitUnitary& pauli_matrix(Pauli p);

/// Applies u to qubit q of s.
StateVector apply_single(const StateVector& s, QubitLabel q, const SingleQubitUnitary& u);
StateVector apply_pauli(const StateVector& s, QubitLabel q, Pauli p);

/// Controlled-Z: negates amplitudes where both qubits are 1. Symmetric in its two qubits.
StateVector apply_cz(const StateVector& s, QubitLabel control, QubitLabel target);

}  // namespace cteleport
