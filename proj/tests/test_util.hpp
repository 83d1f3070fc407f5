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

#include <random>
#include <vector>

#include "cteleport/statevec.hpp"

namespace test_util {

/// Generator of random normalized states and unitaries for property tests.
class Rng {
   public:
    explicit Rng(unsigned seed) : engine_(seed) {}

    double uniform() { return std::uniform_real_distribution<double>(0, 1)(engine_); }
    double normal() { return normal_(engine_); }

    std::vector<cteleport::Amplitude> amplitudes(std::size_t n) {
        std::vector<cteleport::Amplitude> out(n);
        for (auto& a : out) a = {normal(), normal()};
        return out;
    }

    cteleport::StateVector state(std::vector<cteleport::QubitLabel> labels) {
        auto amps = amplitudes(std::size_t{1} << labels.size());
        return cteleport::normalize(std::move(labels), std::move(amps));
    }

   private:
    std::mt19937 engine_;
    std::normal_distribution<double> normal_{0, 1};
};

}  // namespace test_util
