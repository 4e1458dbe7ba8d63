// Copyright 2026 The cohqec Authors
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

#include "cohqec/rng.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cohqec {

Rng Rng::for_stream(std::uint64_t seed, std::uint64_t trial, std::uint64_t cycle, StreamPurpose purpose) {
    std::uint64_t h = mix64(seed + kGolden);
    h = mix64(h + trial + 2 * kGolden);
    h = mix64(h + cycle + 3 * kGolden);
    h = mix64(h + static_cast<std::uint64_t>(purpose) + 4 * kGolden);
    return Rng(h);
}

double Rng::normal() {
    double u1 = uniform_open_low();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::geometric(double p) {
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("geometric: p must be in (0, 1]");
    }
    if (p == 1.0) {
        next_u64();
        return 1;
    }
    double u = uniform_open_low();
    return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p))) + 1;
}

}  // namespace cohqec
