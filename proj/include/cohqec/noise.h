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

#ifndef COHQEC_NOISE_H
#define COHQEC_NOISE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cohqec/pauli.h"
#include "cohqec/rng.h"

namespace cohqec {

/// Distribution of a per-cycle rotation angle (radians).
struct AngleDistribution {
    enum class Kind { constant, normal, uniform };

    Kind kind = Kind::constant;
    double mean = 0.0;
    /// Standard deviation; ignored for constants. A uniform law spans mean ± sqrt(3)·std.
    double std = 0.0;
    /// Hard cutoff on |angle|, enforced by rejection sampling.
    std::optional<double> cutoff;

    static AngleDistribution constant(double value) { return {Kind::constant, value, 0.0, std::nullopt}; }
    static AngleDistribution normal(double mean, double std) { return {Kind::normal, mean, std, std::nullopt}; }
    static AngleDistribution uniform(double mean, double std) { return {Kind::uniform, mean, std, std::nullopt}; }

    void validate() const;
    double sample(Rng &rng) const;
    bool operator==(const AngleDistribution &) const = default;
    std::string str() const;
};

/// E[angle^k]. Closed form without a cutoff; Gauss-Kronrod quadrature (relative tolerance 1e-10) with one.
double distribution_moment(const AngleDistribution &dist, int k);

enum class Spatial { local, global };

/// H = Σ_q ε_q σ_q with ε_q i.i.d. per qubit and per cycle.
struct LocalHamiltonian {
    Axis axis;
    AngleDistribution dist;
};

/// H = ε Σ_q σ_q with one ε per cycle shared by every qubit.
struct GlobalHamiltonian {
    Axis axis;
    AngleDistribution dist;
};

/// ε(n+1) = sqrt(β) ε(n) + sqrt(1-β) δ(n+1), per qubit (local) or shared (global).
struct TimeCorrelated {
    Axis axis;
    Spatial spatial;
    double beta;
    AngleDistribution innovation;
};

/// Independent Pauli flips along `axis` with probability p per qubit per cycle.
struct DiscretePauli {
    Axis axis;
    double p;
};

using NoiseComponent = std::variant<LocalHamiltonian, GlobalHamiltonian, TimeCorrelated, DiscretePauli>;

struct NoiseModel {
    std::vector<NoiseComponent> components;

    /// Checks parameter ranges and that each (kind, axis) pair appears at most once.
    void validate() const;
    bool has_time_correlation() const;
    /// True when every component is a DiscretePauli.
    bool is_discrete() const;
    /// Axis of the continuous (Hamiltonian) components, if any are present and all share it.
    std::optional<Axis> hamiltonian_axis() const;
    std::string str() const;
};

/// Parses "+"-joined component tokens:
///   ln:<axis>:<dist>                      local Hamiltonian
///   gn:<axis>:<dist>                      global Hamiltonian
///   tc:<axis>:<local|global>:beta=<b>:<dist>
///   disc:<axis>:p=<p>
/// where <dist> is const:<v> | normal:<mean>:<std> | uniform:<mean>:<std>, optionally followed by :cut=<c>,
/// and <axis> is x or z.
NoiseModel parse_noise(std::string_view token);

/// Parses a bare <dist> token such as "normal:0:0.1" or "const:0.05:cut=0.2".
AngleDistribution parse_angle_distribution(std::string_view token);

/// One cycle's realized noise.
struct NoiseSample {
    std::vector<double> x_angles;
    std::vector<double> z_angles;
    std::uint64_t x_flips = 0;
    std::uint64_t z_flips = 0;
};

/// Current ε values of each time-correlated component (one per qubit, or one for global components).
struct NoiseProcessState {
    std::size_t n_qubits = 0;
    std::uint64_t next_cycle = 1;
    std::vector<std::vector<double>> correlated;
};

/// Draws the time-correlated components from their stationary law: a normal innovation gives
/// N(sqrt(1-β)μ/(1-sqrt β), σ); other families are shifted copies of the innovation law with that mean.
/// With β = 1 the value is a single innovation draw.
NoiseProcessState init_process(const NoiseModel &model, std::size_t n_qubits, Rng &rng);

/// Advances time-correlated components once, then emits all angles and flips for `cycle_index`.
/// Angles from components on the same axis add. Cycles must be sampled in order starting at 1.
NoiseSample sample_cycle(const NoiseModel &model, NoiseProcessState &state, std::uint64_t cycle_index, Rng &rng);

}  // namespace cohqec

#endif
