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

#ifndef COHQEC_QEC_ENGINE_H
#define COHQEC_QEC_ENGINE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohqec/codes.h"
#include "cohqec/decoder.h"
#include "cohqec/noise.h"
#include "cohqec/statevec.h"

namespace cohqec {

/// Accumulated virtual Pauli operator and the syndrome it imprints on measurements.
/// Invariant: syndrome_of(code, frame) == expected_syndrome.
struct PauliFrame {
    PauliString frame;
    SyndromeRecord expected_syndrome;

    static PauliFrame identity(const StabilizerCode &code) {
        return {PauliString::identity(code.n_qubits), SyndromeRecord{0, code.num_stabilizers()}};
    }
};

enum class Strategy { active, passive };
enum class InitMode { zero, random };

std::string to_string(Strategy s);
std::string to_string(InitMode m);
std::string to_string(LogicalBasis b);
Strategy parse_strategy(std::string_view text);
InitMode parse_init_mode(std::string_view text);
LogicalBasis parse_logical_basis(std::string_view text);

/// One lookup decoder per error axis.
struct Decoders {
    LookupDecoder x;  // decodes X errors from Z-type checks
    LookupDecoder z;  // decodes Z errors from X-type checks

    explicit Decoders(const StabilizerCode &code) : x(code, Axis::X), z(code, Axis::Z) {}
    /// Combined correction for a relative full-code syndrome.
    PauliString correction(const SyndromeRecord &relative) const;
};

/// One QEC cycle: discrete X then Z flips, X then Z rotations, every stabilizer measured in code
/// order (one uniform each), the relative syndrome (physical XOR frame) decoded, and the correction
/// applied to the state (active) or multiplied into the frame (passive). Returns the physical syndrome.
SyndromeRecord qec_cycle(StateVector &state, PauliFrame &frame, const StabilizerCode &code, const Decoders &decoders,
                         const NoiseSample &sample, Strategy strategy, Rng &rng);

/// 1 - |<reference| frame† |state>|^2.
double logical_failure(const StateVector &state, const PauliFrame &frame, const StateVector &reference);

struct TrajectoryConfig {
    Strategy strategy = Strategy::active;
    InitMode init = InitMode::zero;
    LogicalBasis reference = LogicalBasis::zero;
    std::size_t max_qubits = kDefaultMaxQubits;
};

/// Runs independent trajectories of one (code, noise, strategy) configuration.
/// Holds the decoders and reference state so each trajectory only copies a state vector.
///
/// Streams per trajectory: (seed, trial, 0, codespace_init) and (seed, trial, 0, process_init)
/// for initialization, then (seed, trial, cycle, noise) and (seed, trial, cycle, measurement) for
/// cycles 1..n.
class TrajectoryRunner {
   public:
    TrajectoryRunner(StabilizerCode code, NoiseModel model, TrajectoryConfig config);

    const StabilizerCode &code() const { return code_; }
    const NoiseModel &model() const { return model_; }
    const TrajectoryConfig &config() const { return config_; }
    const Decoders &decoders() const { return decoders_; }
    const StateVector &reference() const { return reference_; }

    /// Fills out[c-1] with the logical failure after cycle c.
    void run(std::uint64_t seed, std::uint64_t trial, std::span<double> out) const;
    std::vector<double> run(std::uint64_t seed, std::uint64_t trial, std::size_t n_cycles) const;

   private:
    StabilizerCode code_;
    NoiseModel model_;
    TrajectoryConfig config_;
    Decoders decoders_;
    StateVector reference_;
    std::vector<PauliString> destabilizers_;
};

std::vector<double> run_trajectory(const StabilizerCode &code, const NoiseModel &model, Strategy strategy, InitMode init,
                                   LogicalBasis reference, std::size_t n_cycles, std::uint64_t seed, std::uint64_t trial);

/// Per-syndrome outcome of one exact noisy step on the logical reference.
struct AlphaEntry {
    SyndromeRecord syndrome;
    double probability = 0.0;
    /// Amplitude of L̄|ref> over amplitude of |ref> in the corrected branch; a ratio, so the
    /// global phase convention (reference amplitude real-positive) does not affect it.
    /// Empty for branches with probability below 1e-14.
    std::optional<Amplitude> alpha;
};

struct AlphaDistribution {
    std::vector<AlphaEntry> entries;

    double total_probability() const;
    /// Σ prob·|α|² over non-degenerate branches.
    double mean_abs_alpha_squared() const;
    Amplitude mean_alpha() const;
};

/// Applies ⊗_q exp(-i angles[q] σ^axis) to |0̄> (axis X) or |+̄> (axis Z), projects onto every
/// full syndrome, applies the lookup correction, and reports probability and α for each branch.
/// Requires n_qubits <= 13.
AlphaDistribution exact_alpha_distribution(const StabilizerCode &code, Axis axis, std::span<const double> angles);

}  // namespace cohqec

#endif
