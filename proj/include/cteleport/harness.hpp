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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cteleport/protocol.hpp"

namespace cteleport {

enum class Mode : std::uint8_t { Enumerate, Sample, Derive, Verify };
enum class OutputFormat : std::uint8_t { Json, Csv, Text };

std::string_view to_string(Mode m);
std::string_view to_string(OutputFormat f);
Mode mode_from_string(std::string_view s);
OutputFormat format_from_string(std::string_view s);

/// Bad user configuration (unnormalized coefficients, zero trials, ...). Maps to exit code 2.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kReportSchema = 1;

/// Parses "re", "imj", or "re+imj" / "re-imj" (trailing 'i' also accepted).
Amplitude parse_complex(std::string_view text);
std::vector<Amplitude> parse_coefficient_list(std::string_view text);

struct RunConfig {
    Scheme scheme = Scheme::Two;
    Mode mode = Mode::Enumerate;
    std::optional<std::vector<Amplitude>> input_coeffs;
    bool renormalize = false;
    std::size_t random_inputs = 100;
    std::size_t trials = 16000;
    std::uint64_t seed = 0;
    double fidelity_tol = kFidelityTolerance;
    OutputFormat output_format = OutputFormat::Json;

    /// Throws ConfigError on out-of-range values.
    void validate() const;
    /// The explicit input (renormalized if requested), or nothing when inputs are drawn.
    std::optional<InputState> explicit_input() const;
};

struct BranchRecord {
    std::optional<std::size_t> input_index;
    std::optional<std::size_t> trial;
    BellOutcome outcome13;
    BellOutcome outcome26;
    double probability;
    double fidelity;
    CorrectionOp correction;
};

struct InputBlock {
    std::size_t index;
    std::vector<Amplitude> coeffs;
    double total_probability;
    double min_fidelity;
};

struct OutcomeFrequency {
    BellOutcome outcome13;
    BellOutcome outcome26;
    std::size_t count;
    double frequency;
    double expected;
    double sigma;
    bool within_3sigma;
};

struct Aggregates {
    double min_fidelity = 1.0;
    double total_probability = 0.0;  // enumerate: the per-input sum farthest from 1
    double max_branch_probability_error = 0.0;
    std::vector<OutcomeFrequency> frequencies;  // sample mode
    std::optional<bool> unique_corrections;     // derive mode
};

struct Report {
    RunConfig config;
    std::vector<InputBlock> inputs;
    std::vector<BranchRecord> branches;
    Aggregates aggregates;
    std::optional<TableReport> verdicts;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    int exit_code() const { return passed() ? kExitPass : kExitCheckFailure; }
};

Report run_enumeration(const RunConfig& cfg);
Report run_montecarlo(const RunConfig& cfg);
Report run_derivation(const RunConfig& cfg);
Report run_verification(const RunConfig& cfg);
/// Dispatches on cfg.mode after validating it.
Report run(const RunConfig& cfg);

std::string emit_report(const Report& r, OutputFormat format);

}  // namespace cteleport
