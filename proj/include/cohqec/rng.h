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

#ifndef COHQEC_RNG_H
#define COHQEC_RNG_H

#include <cstdint>

namespace cohqec {

/// The SplitMix64 finalizer (Stafford variant 13); a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Purposes distinguish independent streams that share (seed, trial, cycle).
enum class StreamPurpose : std::uint64_t {
    noise = 0,
    measurement = 1,
    codespace_init = 2,
    process_init = 3,
    walk = 4,
    test = 5,
};

/// Counter-based generator: the i-th output is mix64(key + i * golden).
///
/// Streams are derived, never advanced into one another:
///   key = mix64(mix64(mix64(mix64(seed) + trial) + cycle) + purpose) with each
///   addition offset by the golden-ratio constant.
/// Any (seed, trial, cycle, purpose) tuple can therefore be regenerated independently,
/// which makes trajectories reproducible under any parallel schedule.
class Rng {
   public:
    explicit Rng(std::uint64_t key) : key_(key) {}

    static Rng for_stream(std::uint64_t seed, std::uint64_t trial, std::uint64_t cycle, StreamPurpose purpose);

    std::uint64_t next_u64() {
        counter_ += kGolden;
        return mix64(key_ + counter_);
    }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    /// Uniform on (0, 1].
    double uniform_open_low() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }
    /// Standard normal variate by Box-Muller; consumes two uniforms.
    double normal();
    bool bernoulli(double p) { return uniform() < p; }
    /// Number of Bernoulli(p) trials up to and including the first success (support 1, 2, ...).
    std::uint64_t geometric(double p);

    std::uint64_t key() const { return key_; }

    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace cohqec

#endif
