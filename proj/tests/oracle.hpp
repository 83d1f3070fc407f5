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

// Test-only reference arithmetic. Kets are written out term by term as
// bitstring -> coefficient maps and operators as explicit Kronecker products,
// so nothing here shares index arithmetic with the library kernels.

#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;

struct Ket {
    std::vector<int> labels;
    std::map<std::string, C> terms;  // bitstring in label order -> coefficient
};

inline Ket tensor(const Ket& a, const Ket& b) {
    Ket out;
    out.labels = a.labels;
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) out.terms[ka + kb] += ca * cb;
    }
    return out;
}

inline std::map<std::string, double> bell_terms(const std::string& name) {
    const double h = 1.0 / std::sqrt(2.0);
    if (name == "Phi+") return {{"00", h}, {"11", h}};
    if (name == "Phi-") return {{"00", h}, {"11", -h}};
    if (name == "Psi+") return {{"01", h}, {"10", h}};
    return {{"01", h}, {"10", -h}};  // Psi-
}

/// <Bell(name)|_{a,b} ket, unnormalized, with qubits a and b removed.
inline Ket bell_overlap(const Ket& k, int a, int b, const std::string& name) {
    std::size_t pa = 0, pb = 0;
    for (std::size_t i = 0; i < k.labels.size(); ++i) {
        if (k.labels[i] == a) pa = i;
        if (k.labels[i] == b) pb = i;
    }
    Ket out;
    for (std::size_t i = 0; i < k.labels.size(); ++i) {
        if (i != pa && i != pb) out.labels.push_back(k.labels[i]);
    }
    const auto bell = bell_terms(name);
    for (const auto& [key, c] : k.terms) {
        const std::string pair{key[pa], key[pb]};
        auto it = bell.find(pair);
        if (it == bell.end()) continue;
        std::string rest;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i != pa && i != pb) rest += key[i];
        }
        out.terms[rest] += it->second * c;
    }
    return out;
}

inline double norm2(const Ket& k) {
    double t = 0;
    for (const auto& [_, c] : k.terms) t += std::norm(c);
    return t;
}

/// Dense amplitudes with the first label as the most significant bit.
inline std::vector<C> dense(const Ket& k) {
    std::vector<C> out(std::size_t{1} << k.labels.size());
    for (const auto& [key, c] : k.terms) out[std::stoul(key.empty() ? "0" : key, nullptr, 2)] += c;
    return out;
}

using Matrix = std::vector<std::vector<C>>;

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.size() * b.size(), std::vector<C>(a[0].size() * b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b[0].size(); ++l) out[i * b.size() + k][j * b[0].size() + l] = a[i][j] * b[k][l];
    return out;
}

inline Matrix pauli(char p) {
    const C i(0, 1);
    switch (p) {
        case 'X':
            return {{0, 1}, {1, 0}};
        case 'Y':
            return {{0, -i}, {i, 0}};
        case 'Z':
            return {{1, 0}, {0, -1}};
        default:
            return {{1, 0}, {0, 1}};
    }
}

/// I x ... x u (at position pos) x ... x I over n qubits.
inline Matrix embed(const Matrix& u, std::size_t pos, std::size_t n) {
    Matrix out = {{1}};
    for (std::size_t k = 0; k < n; ++k) out = kron(out, k == pos ? u : pauli('I'));
    return out;
}

inline std::vector<C> apply(const Matrix& m, const std::vector<C>& v) {
    std::vector<C> out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

inline double overlap2(const std::vector<C>& a, const std::vector<C>& b) {
    C t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += std::conj(a[i]) * b[i];
    return std::norm(t);
}

}  // namespace oracle
