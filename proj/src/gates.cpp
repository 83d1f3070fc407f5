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

#include "cteleport/gates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cteleport {

char to_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case 'i':
            return Pauli::I;
        case 'X':
        case 'x':
            return Pauli::X;
        case 'Y':
        case 'y':
            return Pauli::Y;
        case 'Z':
        case 'z':
            return Pauli::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
}

double unitarity_error(const std::array<Amplitude, 4>& m) {
    double worst = 0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            // (U^dagger U)_{rc} = sum_k conj(U_{kr}) U_{kc}
            Amplitude v = std::conj(m[r]) * m[c] + std::conj(m[2 + r]) * m[2 + c];
            worst = std::max(worst, std::abs(v - Amplitude(r == c ? 1.0 : 0.0)));
        }
    }
    return worst;
}

SingleQubitUnitary::SingleQubitUnitary(std::array<Amplitude, 4> entries) : m_(entries) {
    for (const auto& a : m_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("matrix entries must be finite");
        }
    }
    if (unitarity_error(m_) > kUnitarityTolerance) {
        throw std::invalid_argument("matrix is not unitary");
    }
}

SingleQubitUnitary SingleQubitUnitary::adjoint() const {
    return SingleQubitUnitary({std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])});
}

SingleQubitUnitary SingleQubitUnitary::operator*(const SingleQubitUnitary& rhs) const {
    std::array<Amplitude, 4> out{};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out[r * 2 + c] = m_[r * 2] * rhs.m_[c] + m_[r * 2 + 1] * rhs.m_[2 + c];
        }
    }
    return SingleQubitUnitary(out);
}

const SingleQubitUnitary& pauli_matrix(Pauli p) {
    static const SingleQubitUnitary kI({1.0, 0.0, 0.0, 1.0});
    static const SingleQubitUnitary kX({0.0, 1.0, 1.0, 0.0});
    static const SingleQubitUnitary kY({0.0, Amplitude(0, -1), Amplitude(0, 1), 0.0});
    static const SingleQubitUnitary kZ({1.0, 0.0, 0.0, -1.0});
    switch (p) {
        case Pauli::I:
            return kI;
        case Pauli::X:
            return kX;
        case Pauli::Y:
            return kY;
        case Pauli::Z:
            return kZ;
    }
    throw std::invalid_argument("unknown Pauli");
}

StateVector apply_single(const StateVector& s, QubitLabel q, const SingleQubitUnitary& u) {
    const std::size_t mask = s.bit_mask(q);
    std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) continue;
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | mask];
        amps[i] = u(0, 0) * a0 + u(0, 1) * a1;
        amps[i | mask] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return detail::StateAccess::adopt(std::vector<QubitLabel>(s.labels().begin(), s.labels().end()),
                                      std::move(amps));
}

StateVector apply_pauli(const StateVector& s, QubitLabel q, Pauli p) {
    if (p == Pauli::I) {
        s.position(q);  // still reject unknown labels
        return s;
    }
    return apply_single(s, q, pauli_matrix(p));
}

StateVector apply_cz(const StateVector& s, QubitLabel control, QubitLabel target) {
    if (control == target) {
        throw std::invalid_argument("apply_cz: control and target must differ (both " + std::to_string(control.id) +
                                    ")");
    }
    const std::size_t both = s.bit_mask(control) | s.bit_mask(target);
    std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & both) == both) amps[i] = -amps[i];
    }
    return detail::StateAccess::adopt(std::vector<QubitLabel>(s.labels().begin(), s.labels().end()),
                                      std::move(amps));
}

}  // namespace cteleport
