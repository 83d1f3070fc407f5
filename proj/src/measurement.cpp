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

#include "cteleport/measurement.hpp"

#include <cmath>
#include <string>

namespace cteleport {

namespace {

// Bell-state coefficients over |00>, |01>, |10>, |11> of the pair (a, b).
std::array<double, 4> bell_coefficients(BellOutcome o) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (o) {
        case BellOutcome::PhiPlus:
            return {h, 0, 0, h};
        case BellOutcome::PhiMinus:
            return {h, 0, 0, -h};
        case BellOutcome::PsiPlus:
            return {0, h, h, 0};
        case BellOutcome::PsiMinus:
            return {0, h, -h, 0};
    }
    throw std::invalid_argument("unknown Bell outcome");
}

// Partial inner product <Bell(o)|_{ab} s, unnormalized, over the remaining qubits.
std::vector<Amplitude> partial_overlap(const StateVector& s, std::size_t mask_a, std::size_t mask_b,
                                       const std::array<double, 4>& coeffs) {
    const std::size_t n = s.num_qubits();
    std::vector<Amplitude> out(std::size_t{1} << (n - 2));
    for (std::size_t rest = 0; rest < out.size(); ++rest) {
        // Spread the n-2 remainder bits over the positions not occupied by a or b.
        std::size_t base = 0;
        std::size_t src_bit = out.size() >> 1;
        for (std::size_t bit = std::size_t{1} << (n - 1); bit != 0; bit >>= 1) {
            if (bit == mask_a || bit == mask_b) continue;
            if (rest & src_bit) base |= bit;
            src_bit >>= 1;
        }
        Amplitude acc = 0;
        for (std::size_t xy = 0; xy < 4; ++xy) {
            if (coeffs[xy] == 0) continue;
            std::size_t idx = base;
            if (xy & 2) idx |= mask_a;
            if (xy & 1) idx |= mask_b;
            acc += coeffs[xy] * s[idx];  // Bell coefficients are real, conj is a no-op
        }
        out[rest] = acc;
    }
    return out;
}

void check_pair(const StateVector& s, QubitLabel a, QubitLabel b) {
    if (a == b) throw std::invalid_argument("Bell measurement needs two distinct qubits");
    s.position(a);
    s.position(b);
}

}  // namespace

std::string_view to_string(BellOutcome o) {
    switch (o) {
        case BellOutcome::PhiPlus:
            return "Phi+";
        case BellOutcome::PhiMinus:
            return "Phi-";
        case BellOutcome::PsiPlus:
            return "Psi+";
        case BellOutcome::PsiMinus:
            return "Psi-";
    }
    return "?";
}

BellOutcome bell_outcome_from_string(std::string_view s) {
    for (auto o : kAllBellOutcomes) {
        if (to_string(o) == s) return o;
    }
    throw std::invalid_argument("not a Bell outcome: '" + std::string(s) + "'");
}

StateVector bell_vector(BellOutcome o, QubitLabel a, QubitLabel b) {
    if (a == b) throw std::invalid_argument("bell_vector: labels must differ");
    const auto c = bell_coefficients(o);
    return detail::StateAccess::adopt({a, b}, {c[0], c[1], c[2], c[3]});
}

const StateVector& ProjectionResult::remainder() const {
    if (!remainder_) {
        throw ImpossibleBranch("Bell outcome has probability " + std::to_string(probability_) +
                               "; no post-measurement state exists");
    }
    return *remainder_;
}

ProjectionResult project_bell(const StateVector& s, QubitLabel a, QubitLabel b, BellOutcome o) {
    check_pair(s, a, b);
    auto raw = partial_overlap(s, s.bit_mask(a), s.bit_mask(b), bell_coefficients(o));
    const double p = squared_norm(raw);

    std::vector<QubitLabel> rest;
    for (const auto& l : s.labels()) {
        if (l != a && l != b) rest.push_back(l);
    }
    if (p < kNormTolerance) return ProjectionResult(p, std::nullopt);
    return ProjectionResult(p, normalize(std::move(rest), std::move(raw)));
}

std::array<double, 4> bell_probabilities(const StateVector& s, QubitLabel a, QubitLabel b) {
    check_pair(s, a, b);
    std::array<double, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
        out[k] = squared_norm(partial_overlap(s, s.bit_mask(a), s.bit_mask(b), bell_coefficients(kAllBellOutcomes[k])));
    }
    return out;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_index), static_cast<std::uint32_t>(stream_index >> 32)};
    engine_.seed(seq);
}

double RandomStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomStream::normal() { return normal_(engine_); }

BellSample sample_bell(const StateVector& s, QubitLabel a, QubitLabel b, RandomStream& rng) {
    const auto probs = bell_probabilities(s, a, b);
    const double u = rng.uniform();
    double cumulative = 0;
    std::size_t pick = 4;
    std::size_t last_possible = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (probs[k] >= kNormTolerance) last_possible = k;
        cumulative += probs[k];
        if (pick == 4 && u < cumulative && probs[k] >= kNormTolerance) pick = k;
    }
    // Rounding can leave u above the final cumulative sum.
    if (pick == 4) pick = last_possible;
    const BellOutcome o = kAllBellOutcomes[pick];
    return BellSample{o, project_bell(s, a, b, o)};
}

}  // namespace cteleport
