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
#include <optional>
#include <random>
#include <string_view>

#include "cteleport/statevec.hpp"

namespace cteleport {

enum class BellOutcome : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kAllBellOutcomes = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus, BellOutcome::PsiMinus};

/// "Phi+", "Phi-", "Psi+", "Psi-".
std::string_view to_string(BellOutcome o);
BellOutcome bell_outcome_from_string(std::string_view s);

/// Phi(+/-) = (|00> +/- |11>)/sqrt2, Psi(+/-) = (|01> +/- |10>)/sqrt2 on labels (a, b), a first.
StateVector bell_vector(BellOutcome o, QubitLabel a, QubitLabel b);

/// Outcome probability of a Bell projection plus the collapsed rest of the register.
class ProjectionResult {
   public:
    ProjectionResult(double probability, std::optional<StateVector> remainder)
        : probability_(probability), remainder_(std::move(remainder)) {}

    double probability() const { return probability_; }
    /// False when the probability is below kNormTolerance; no remainder exists then.
    bool possible() const { return remainder_.has_value(); }
    /// Throws ImpossibleBranch when !possible().
    const StateVector& remainder() const;

   private:
    double probability_;
    std::optional<StateVector> remainder_;
};

/// Projects qubits (a, b) of s onto the Bell state o and removes them from the
/// register. The remainder keeps the other labels in their original order.
ProjectionResult project_bell(const StateVector& s, QubitLabel a, QubitLabel b, BellOutcome o);

/// Born probabilities of the four outcomes, indexed like kAllBellOutcomes.
std::array<double, 4> bell_probabilities(const StateVector& s, QubitLabel a, QubitLabel b);

/// Deterministic random stream keyed by (seed, stream index). Two streams with
/// the same key produce the same sequence regardless of creation order, so
/// independent trials can be drawn in any order or in parallel.
class RandomStream {
   public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_index);

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform();
    double normal();

   private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

struct BellSample {
    BellOutcome outcome;
    ProjectionResult result;
};

/// Draws a Bell outcome on (a, b) with Born probabilities and returns its projection.
BellSample sample_bell(const StateVector& s, QubitLabel a, QubitLabel b, RandomStream& rng);

}  // namespace cteleport
