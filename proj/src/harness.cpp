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

#include "cteleport/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace cteleport {

namespace {

constexpr double kBranchProbability = 1.0 / 16.0;
constexpr double kTotalProbabilityTolerance = 1e-9;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ConfigError("cannot parse complex number '" + std::string(whole) + "'");
    }
    return v;
}

std::size_t pair_index(BellOutcome o13, BellOutcome o26) {
    return static_cast<std::size_t>(o13) * 4 + static_cast<std::size_t>(o26);
}

void check_fidelity(Report& r, double f, const std::string& where) {
    r.aggregates.min_fidelity = std::min(r.aggregates.min_fidelity, f);
    if (f < 1.0 - r.config.fidelity_tol) {
        std::ostringstream msg;
        msg << std::setprecision(17) << where << ": fidelity " << f << " below 1 - " << r.config.fidelity_tol;
        r.failures.push_back(msg.str());
    }
}

std::string fmt_double(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

std::string fmt_complex(Amplitude a) {
    std::ostringstream out;
    out << std::setprecision(17) << a.real() << (std::signbit(a.imag()) ? "-" : "+")
        << std::abs(a.imag()) << "j";
    return out.str();
}

}  // namespace

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::Enumerate:
            return "enumerate";
        case Mode::Sample:
            return "sample";
        case Mode::Derive:
            return "derive";
        case Mode::Verify:
            return "verify";
    }
    return "?";
}

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json:
            return "json";
        case OutputFormat::Csv:
            return "csv";
        case OutputFormat::Text:
            return "text";
    }
    return "?";
}

Mode mode_from_string(std::string_view s) {
    for (Mode m : {Mode::Enumerate, Mode::Sample, Mode::Derive, Mode::Verify}) {
        if (to_string(m) == s) return m;
    }
    throw ConfigError("unknown mode '" + std::string(s) + "'");
}

OutputFormat format_from_string(std::string_view s) {
    for (OutputFormat f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text}) {
        if (to_string(f) == s) return f;
    }
    throw ConfigError("unknown output format '" + std::string(s) + "'");
}

Amplitude parse_complex(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ConfigError("empty complex number");
    if (s.back() != 'j' && s.back() != 'i') return {parse_real(s, text), 0.0};

    const std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not the leading sign or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
    double im = 0;
    if (im_part.empty() || im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else {
        im = parse_real(im_part, text);
    }
    return {re_part.empty() ? 0.0 : parse_real(re_part, text), im};
}

std::vector<Amplitude> parse_coefficient_list(std::string_view text) {
    std::vector<Amplitude> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_complex(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

void RunConfig::validate() const {
    if (scheme != Scheme::One && scheme != Scheme::Two) throw ConfigError("scheme must be 1 or 2");
    if (mode == Mode::Sample && trials == 0) throw ConfigError("trials must be at least 1");
    if (mode == Mode::Enumerate && !input_coeffs && random_inputs == 0) {
        throw ConfigError("random-inputs must be at least 1 when no coefficients are given");
    }
    if (!(fidelity_tol >= 0.0 && fidelity_tol < 1.0)) throw ConfigError("tolerance must lie in [0, 1)");
    explicit_input();
}

std::optional<InputState> RunConfig::explicit_input() const {
    if (!input_coeffs) return std::nullopt;
    std::vector<Amplitude> c = *input_coeffs;
    if (renormalize) {
        const double n = std::sqrt(squared_norm(c));
        if (!(n > 0) || !std::isfinite(n)) throw ConfigError("cannot renormalize a zero coefficient vector");
        for (auto& a : c) a /= n;
    }
    try {
        return InputState::from_coefficients(scheme, c);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

Report run_enumeration(const RunConfig& cfg) {
    cfg.validate();
    Report r{cfg, {}, {}, {}, {}, {}};
    std::vector<InputState> inputs;
    if (auto given = cfg.explicit_input()) {
        inputs.push_back(*given);
    } else {
        for (std::size_t k = 0; k < cfg.random_inputs; ++k) {
            RandomStream rng(cfg.seed, k);
            inputs.push_back(InputState::random(cfg.scheme, rng));
        }
    }

    double worst_total_error = -1;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        InputBlock block{k, inputs[k].coefficients(), 0.0, 1.0};
        for (BellOutcome o13 : kAllBellOutcomes) {
            for (BellOutcome o26 : kAllBellOutcomes) {
                const auto t = run_branch(inputs[k], o13, o26);
                block.total_probability += t.probability;
                block.min_fidelity = std::min(block.min_fidelity, t.fidelity);
                r.aggregates.max_branch_probability_error =
                    std::max(r.aggregates.max_branch_probability_error, std::abs(t.probability - kBranchProbability));
                check_fidelity(r, t.fidelity,
                               "input " + std::to_string(k) + " branch (" + std::string(to_string(o13)) + "," +
                                   std::string(to_string(o26)) + ")");
                r.branches.push_back({k, std::nullopt, o13, o26, t.probability, t.fidelity, t.correction});
            }
        }
        const double err = std::abs(block.total_probability - 1.0);
        if (err > worst_total_error) {
            worst_total_error = err;
            r.aggregates.total_probability = block.total_probability;
        }
        if (err > kTotalProbabilityTolerance) {
            r.failures.push_back("input " + std::to_string(k) + ": total probability " +
                                 fmt_double(block.total_probability) + " differs from 1");
        }
        r.inputs.push_back(std::move(block));
    }
    return r;
}

Report run_montecarlo(const RunConfig& cfg) {
    cfg.validate();
    Report r{cfg, {}, {}, {}, {}, {}};
    const auto given = cfg.explicit_input();
    if (given) r.inputs.push_back({0, given->coefficients(), 1.0, 1.0});

    std::array<std::size_t, 16> counts{};
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        RandomStream rng(cfg.seed, t);
        const InputState input = given ? *given : InputState::random(cfg.scheme, rng);
        const auto first = sample_bell(assemble_total(input), qubits::kInput1, qubits::kChannel3, rng);
        const auto second =
            sample_bell(first.result.remainder(), qubits::kInput2, qubits::kChannel6, rng);
        const CorrectionOp op = table_lookup(cfg.scheme, first.outcome, second.outcome).front();
        const StateVector out = apply_correction(second.result.remainder(), op);
        const double f = fidelity(teleport_target(input), out);
        const double p = first.result.probability() * second.result.probability();

        ++counts[pair_index(first.outcome, second.outcome)];
        check_fidelity(r, f, "trial " + std::to_string(t));
        r.branches.push_back({given ? std::optional<std::size_t>(0) : std::nullopt, t, first.outcome,
                              second.outcome, p, f, op});
        r.aggregates.max_branch_probability_error =
            std::max(r.aggregates.max_branch_probability_error, std::abs(p - kBranchProbability));
    }
    if (given) r.inputs.front().min_fidelity = r.aggregates.min_fidelity;

    const double n = static_cast<double>(cfg.trials);
    const double sigma = std::sqrt(kBranchProbability * (1.0 - kBranchProbability) / n);
    for (BellOutcome o13 : kAllBellOutcomes) {
        for (BellOutcome o26 : kAllBellOutcomes) {
            const std::size_t c = counts[pair_index(o13, o26)];
            const double freq = static_cast<double>(c) / n;
            r.aggregates.frequencies.push_back(
                {o13, o26, c, freq, kBranchProbability, sigma, std::abs(freq - kBranchProbability) <= 3.0 * sigma});
        }
    }
    r.aggregates.total_probability = 1.0;
    return r;
}

Report run_derivation(const RunConfig& cfg) {
    cfg.validate();
    Report r{cfg, {}, {}, {}, {}, {}};
    const auto probes = default_probes(cfg.scheme, cfg.seed);
    bool unique = true;
    for (BellOutcome o13 : kAllBellOutcomes) {
        for (BellOutcome o26 : kAllBellOutcomes) {
            const double p = collapse(assemble_total(probes.front()), o13, o26).probability;
            r.aggregates.total_probability += p;
            r.aggregates.max_branch_probability_error =
                std::max(r.aggregates.max_branch_probability_error, std::abs(p - kBranchProbability));
            std::vector<CorrectionOp> derived;
            try {
                derived = derive_corrections(cfg.scheme, o13, o26, probes);
            } catch (const std::logic_error& e) {
                r.failures.push_back(e.what());
                continue;
            }
            unique = unique && derived.size() == 1;
            for (const auto& op : derived) {
                const double f = min_probe_fidelity(op, o13, o26, probes);
                r.aggregates.min_fidelity = std::min(r.aggregates.min_fidelity, f);
                r.branches.push_back({std::nullopt, std::nullopt, o13, o26, p, f, op});
            }
        }
    }
    r.aggregates.unique_corrections = unique;
    return r;
}

Report run_verification(const RunConfig& cfg) {
    cfg.validate();
    Report r{cfg, {}, {}, {}, {}, {}};
    TableReport table = verify_tables(cfg.scheme, cfg.seed);
    const auto probes = default_probes(cfg.scheme, cfg.seed);
    for (const auto& cell : table.cells) {
        const double p = collapse(assemble_total(probes.front()), cell.outcome13, cell.outcome26).probability;
        r.aggregates.total_probability += p;
        r.aggregates.max_branch_probability_error =
            std::max(r.aggregates.max_branch_probability_error, std::abs(p - kBranchProbability));
        for (const auto& entry : cell.listed) {
            r.aggregates.min_fidelity = std::min(r.aggregates.min_fidelity, entry.min_fidelity);
            r.branches.push_back({std::nullopt, std::nullopt, cell.outcome13, cell.outcome26, p, entry.min_fidelity,
                                  entry.op});
        }
        if (cell.verdict == Verdict::Mismatch) {
            r.failures.push_back("table cell (" + std::string(to_string(cell.outcome13)) + "," +
                                 std::string(to_string(cell.outcome26)) + ") does not match the derived corrections");
        }
    }
    if (std::abs(r.aggregates.total_probability - 1.0) > kTotalProbabilityTolerance) {
        r.failures.push_back("total probability " + fmt_double(r.aggregates.total_probability) + " differs from 1");
    }
    r.verdicts = std::move(table);
    return r;
}

Report run(const RunConfig& cfg) {
    switch (cfg.mode) {
        case Mode::Enumerate:
            return run_enumeration(cfg);
        case Mode::Sample:
            return run_montecarlo(cfg);
        case Mode::Derive:
            return run_derivation(cfg);
        case Mode::Verify:
            return run_verification(cfg);
    }
    throw ConfigError("unknown mode");
}

namespace {

using nlohmann::ordered_json;

ordered_json complex_json(Amplitude a) { return ordered_json::array({a.real(), a.imag()}); }

ordered_json coeffs_json(const std::vector<Amplitude>& c) {
    ordered_json out = ordered_json::array();
    for (const auto& a : c) out.push_back(complex_json(a));
    return out;
}

ordered_json config_json(const RunConfig& c) {
    ordered_json j;
    j["scheme"] = static_cast<int>(c.scheme);
    j["mode"] = to_string(c.mode);
    j["input_coeffs"] = c.input_coeffs ? coeffs_json(*c.input_coeffs) : ordered_json(nullptr);
    j["renormalize"] = c.renormalize;
    j["random_inputs"] = c.random_inputs;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["fidelity_tol"] = c.fidelity_tol;
    j["format"] = to_string(c.output_format);
    return j;
}

ordered_json verdicts_json(const TableReport& t) {
    ordered_json out = ordered_json::array();
    for (const auto& cell : t.cells) {
        ordered_json c;
        c["outcome13"] = to_string(cell.outcome13);
        c["outcome26"] = to_string(cell.outcome26);
        c["verdict"] = to_string(cell.verdict);
        ordered_json derived = ordered_json::array();
        for (const auto& op : cell.derived) derived.push_back(op.to_string());
        c["derived"] = std::move(derived);
        ordered_json listed = ordered_json::array();
        for (const auto& e : cell.listed) {
            ordered_json le;
            le["correction"] = e.op.to_string();
            le["min_fidelity"] = e.min_fidelity;
            le["verdict"] = to_string(e.verdict);
            if (e.general_verdict) {
                le["general_min_fidelity"] = *e.general_min_fidelity;
                le["general_verdict"] = to_string(*e.general_verdict);
            }
            listed.push_back(std::move(le));
        }
        c["listed"] = std::move(listed);
        out.push_back(std::move(c));
    }
    return out;
}

std::string emit_json(const Report& r) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["config"] = config_json(r.config);
    ordered_json inputs = ordered_json::array();
    for (const auto& b : r.inputs) {
        ordered_json ib;
        ib["index"] = b.index;
        ib["coeffs"] = coeffs_json(b.coeffs);
        ib["total_probability"] = b.total_probability;
        ib["min_fidelity"] = b.min_fidelity;
        inputs.push_back(std::move(ib));
    }
    j["inputs"] = std::move(inputs);

    ordered_json branches = ordered_json::array();
    for (const auto& b : r.branches) {
        ordered_json jb;
        if (b.input_index) jb["input_index"] = *b.input_index;
        if (b.trial) jb["trial"] = *b.trial;
        jb["outcome13"] = to_string(b.outcome13);
        jb["outcome26"] = to_string(b.outcome26);
        jb["probability"] = b.probability;
        jb["fidelity"] = b.fidelity;
        jb["correction"] = b.correction.to_string();
        branches.push_back(std::move(jb));
    }
    j["branches"] = std::move(branches);

    ordered_json agg;
    agg["total_probability"] = r.aggregates.total_probability;
    agg["min_fidelity"] = r.aggregates.min_fidelity;
    agg["max_branch_probability_error"] = r.aggregates.max_branch_probability_error;
    if (!r.aggregates.frequencies.empty()) {
        ordered_json freqs = ordered_json::array();
        for (const auto& f : r.aggregates.frequencies) {
            ordered_json jf;
            jf["outcome13"] = to_string(f.outcome13);
            jf["outcome26"] = to_string(f.outcome26);
            jf["count"] = f.count;
            jf["frequency"] = f.frequency;
            jf["expected"] = f.expected;
            jf["sigma"] = f.sigma;
            jf["within_3sigma"] = f.within_3sigma;
            freqs.push_back(std::move(jf));
        }
        agg["frequencies"] = std::move(freqs);
    }
    if (r.aggregates.unique_corrections) agg["unique_corrections"] = *r.aggregates.unique_corrections;
    agg["passed"] = r.passed();
    agg["failures"] = r.failures;
    j["aggregates"] = std::move(agg);
    j["verdicts"] = r.verdicts ? verdicts_json(*r.verdicts) : ordered_json::array();
    return j.dump(2) + "\n";
}

std::string emit_csv(const Report& r) {
    std::ostringstream out;
    out << "outcome13,outcome26,probability,fidelity,correction\n";
    for (const auto& b : r.branches) {
        out << to_string(b.outcome13) << ',' << to_string(b.outcome26) << ',' << fmt_double(b.probability) << ','
            << fmt_double(b.fidelity) << ',' << b.correction.to_string() << '\n';
    }
    return out.str();
}

std::string emit_text(const Report& r) {
    std::ostringstream out;
    out << "mode " << to_string(r.config.mode) << ", scheme " << static_cast<int>(r.config.scheme) << ", seed "
        << r.config.seed << "\n";
    for (const auto& b : r.inputs) {
        out << "input " << b.index << ":";
        for (const auto& c : b.coeffs) out << ' ' << fmt_complex(c);
        out << "\n";
    }
    if (r.config.mode == Mode::Sample && r.inputs.empty()) out << "inputs: random per trial\n";
    out << "\n";

    if (r.config.mode == Mode::Sample) {
        out << std::left << std::setw(7) << "o13" << std::setw(7) << "o26" << std::setw(8) << "count"
            << std::setw(12) << "frequency" << "3-sigma\n";
        for (const auto& f : r.aggregates.frequencies) {
            out << std::setw(7) << to_string(f.outcome13) << std::setw(7) << to_string(f.outcome26) << std::setw(8)
                << f.count << std::setw(12) << std::setprecision(6) << std::fixed << f.frequency
                << (f.within_3sigma ? "ok" : "OUT") << "\n";
            out.unsetf(std::ios::fixed);
        }
    } else {
        out << std::left << std::setw(7) << "input" << std::setw(7) << "o13" << std::setw(7) << "o26" << std::setw(12)
            << "probability" << std::setw(22) << "fidelity" << "correction\n";
        for (const auto& b : r.branches) {
            out << std::setw(7) << (b.input_index ? std::to_string(*b.input_index) : "-") << std::setw(7)
                << to_string(b.outcome13) << std::setw(7) << to_string(b.outcome26) << std::setw(12)
                << std::setprecision(8) << b.probability << std::setw(22) << std::setprecision(17) << b.fidelity
                << b.correction.to_string() << "\n";
        }
    }

    if (r.verdicts) {
        out << "\ntable verdicts:\n";
        for (const auto& cell : r.verdicts->cells) {
            out << "  (" << to_string(cell.outcome13) << "," << to_string(cell.outcome26) << ") "
                << to_string(cell.verdict) << "  listed:";
            for (const auto& e : cell.listed) {
                out << ' ' << e.op.to_string();
                if (e.general_verdict) out << '[' << to_string(*e.general_verdict) << " on general inputs]";
            }
            out << "  derived:";
            for (const auto& op : cell.derived) out << ' ' << op.to_string();
            out << "\n";
        }
    }

    out << "\ntotal probability " << fmt_double(r.aggregates.total_probability) << "\nmin fidelity "
        << fmt_double(r.aggregates.min_fidelity) << "\n";
    if (r.aggregates.unique_corrections) {
        out << "unique correction per branch: " << (*r.aggregates.unique_corrections ? "yes" : "no") << "\n";
    }
    if (r.passed()) {
        out << "PASS\n";
    } else {
        out << "FAIL\n";
        for (const auto& f : r.failures) out << "  " << f << "\n";
    }
    return out.str();
}

}  // namespace

std::string emit_report(const Report& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return emit_json(r);
        case OutputFormat::Csv:
            return emit_csv(r);
        case OutputFormat::Text:
            return emit_text(r);
    }
    return {};
}

}  // namespace cteleport
