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

#include "cteleport/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace cteleport {

namespace detail {

void check_labels(std::span<const QubitLabel> labels) {
    if (labels.size() > kMaxQubits) {
        throw std::invalid_argument(
            "register of " + std::to_string(labels.size()) + " qubits exceeds the limit of " +
            std::to_string(kMaxQubits));
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) {
                throw std::invalid_argument("duplicate qubit label " + std::to_string(labels[i].id));
            }
        }
    }
}

}  // namespace detail

namespace {

std::string label_list(std::span<const QubitLabel> labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(labels[i].id);
    }
    return out + "]";
}

}  // namespace

double squared_norm(std::span<const Amplitude> amps) {
    double total = 0;
    for (const auto& a : amps) total += std::norm(a);
    return total;
}

StateVector StateVector::from_amplitudes(std::vector<QubitLabel> labels, std::vector<Amplitude> amps) {
    detail::check_labels(labels);
    if (amps.size() != (std::size_t{1} << labels.size())) {
        throw std::invalid_argument(
            "expected " + std::to_string(std::size_t{1} << labels.size()) + " amplitudes for " +
            std::to_string(labels.size()) + " qubits, got " + std::to_string(amps.size()));
    }
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("amplitudes must be finite");
        }
    }
    double n2 = squared_norm(amps);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg << std::setprecision(17) << "state is not normalized (squared norm " << n2 << ")";
        throw std::invalid_argument(msg.str());
    }
    return StateVector(std::move(labels), std::move(amps));
}

bool StateVector::contains(QubitLabel q) const {
    return std::find(labels_.begin(), labels_.end(), q) != labels_.end();
}

std::size_t StateVector::position(QubitLabel q) const {
    auto it = std::find(labels_.begin(), labels_.end(), q);
    if (it == labels_.end()) {
        throw std::invalid_argument("qubit " + std::to_string(q.id) + " not in register " + label_list(labels_));
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t StateVector::bit_mask(QubitLabel q) const {
    return std::size_t{1} << (labels_.size() - 1 - position(q));
}

StateVector StateVector::with_global_phase(double theta) const {
    const Amplitude phase = std::polar(1.0, theta);
    std::vector<Amplitude> out(amps_);
    for (auto& a : out) a *= phase;
    return StateVector(labels_, std::move(out));
}

std::vector<Amplitude> StateVector::phase_canonical_amplitudes() const {
    std::vector<Amplitude> out(amps_);
    for (const auto& a : amps_) {
        if (std::abs(a) > kNormTolerance) {
            const Amplitude rot = std::conj(a) / std::abs(a);
            for (auto& b : out) b *= rot;
            break;
        }
    }
    return out;
}

std::string StateVector::to_string(int precision) const {
    std::ostringstream out;
    out << std::setprecision(precision);
    const auto amps = phase_canonical_amplitudes();
    bool first = true;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) <= 1e-12) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << amps[i].real();
        if (amps[i].imag() >= 0) out << "+";
        out << amps[i].imag() << "j)|";
        for (std::size_t k = 0; k < labels_.size(); ++k) {
            out << ((i >> (labels_.size() - 1 - k)) & 1);
        }
        out << ">";
    }
    if (first) out << "0";
    if (!labels_.empty()) {
        out << "_";
        for (const auto& l : labels_) out << l.id;
    }
    return out.str();
}

StateVector basis_state(std::vector<QubitLabel> labels, std::span<const int> bits) {
    if (labels.empty()) throw std::invalid_argument("basis_state needs at least one qubit");
    if (labels.size() != bits.size()) {
        throw std::invalid_argument("basis_state: " + std::to_string(labels.size()) + " labels but " +
                                    std::to_string(bits.size()) + " bits");
    }
    detail::check_labels(labels);
    std::size_t index = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("basis_state: bits must be 0 or 1");
        index = (index << 1) | static_cast<std::size_t>(b);
    }
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    amps[index] = 1.0;
    return detail::StateAccess::adopt(std::move(labels), std::move(amps));
}

StateVector basis_state(std::vector<QubitLabel> labels, std::initializer_list<int> bits) {
    return basis_state(std::move(labels), std::span<const int>(bits.begin(), bits.size()));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<QubitLabel> labels(a.labels().begin(), a.labels().end());
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    detail::check_labels(labels);

    std::vector<Amplitude> amps(a.dimension() * b.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < b.dimension(); ++j) {
            amps[i * b.dimension() + j] = a[i] * b[j];
        }
    }
    return detail::StateAccess::adopt(std::move(labels), std::move(amps));
}

Amplitude inner(const StateVector& a, const StateVector& b) {
    if (!std::equal(a.labels().begin(), a.labels().end(), b.labels().begin(), b.labels().end())) {
        throw std::invalid_argument("inner: label lists differ: " + label_list(a.labels()) + " vs " +
                                    label_list(b.labels()));
    }
    Amplitude total = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) total += std::conj(a[i]) * b[i];
    return total;
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("fidelity: label sets differ: " + label_list(a.labels()) + " vs " +
                                    label_list(b.labels()));
    }
    const StateVector aligned = permute(b, a.labels());
    return std::min(1.0, std::norm(inner(a, aligned)));
}

StateVector normalize(std::vector<QubitLabel> labels, std::vector<Amplitude> amps) {
    detail::check_labels(labels);
    if (amps.size() != (std::size_t{1} << labels.size())) {
        throw std::invalid_argument("normalize: amplitude count does not match register size");
    }
    const double n = std::sqrt(squared_norm(amps));
    if (!(n > kNormTolerance)) {
        throw ImpossibleBranch("cannot normalize a zero vector (impossible measurement branch)");
    }
    for (auto& a : amps) a /= n;
    return detail::StateAccess::adopt(std::move(labels), std::move(amps));
}

StateVector permute(const StateVector& s, std::span<const QubitLabel> order) {
    if (order.size() != s.num_qubits()) {
        throw std::invalid_argument("permute: " + label_list(order) + " is not a permutation of " +
                                    label_list(s.labels()));
    }
    detail::check_labels(order);
    const std::size_t n = order.size();
    // shift[k]: bit offset in the source index of the qubit placed at position k.
    std::vector<std::size_t> shift(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!s.contains(order[k])) {
            throw std::invalid_argument("permute: " + label_list(order) + " is not a permutation of " +
                                        label_list(s.labels()));
        }
        shift[k] = n - 1 - s.position(order[k]);
    }
    std::vector<Amplitude> amps(s.dimension());
    for (std::size_t dst = 0; dst < amps.size(); ++dst) {
        std::size_t src = 0;
        for (std::size_t k = 0; k < n; ++k) {
            src |= ((dst >> (n - 1 - k)) & 1) << shift[k];
        }
        amps[dst] = s[src];
    }
    return detail::StateAccess::adopt(std::vector<QubitLabel>(order.begin(), order.end()), std::move(amps));
}

StateVector relabel(const StateVector& s, std::span<const std::pair<QubitLabel, QubitLabel>> mapping) {
    std::vector<QubitLabel> labels(s.labels().begin(), s.labels().end());
    std::vector<bool> renamed(labels.size(), false);
    for (const auto& [from, to] : mapping) {
        const std::size_t pos = s.position(from);
        if (renamed[pos]) throw std::invalid_argument("relabel: qubit " + std::to_string(from.id) + " mapped twice");
        labels[pos] = to;
        renamed[pos] = true;
    }
    detail::check_labels(labels);
    return detail::StateAccess::adopt(std::move(labels),
                                      std::vector<Amplitude>(s.amplitudes().begin(), s.amplitudes().end()));
}

}  // namespace cteleport
