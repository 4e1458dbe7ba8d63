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

#ifndef COHQEC_STATEVEC_H
#define COHQEC_STATEVEC_H

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cohqec/pauli.h"
#include "cohqec/rng.h"

namespace cohqec {

using Amplitude = std::complex<double>;

/// Default memory cap: 2^25 amplitudes.
inline constexpr std::size_t kDefaultMaxQubits = 25;

/// Thrown when a requested state would exceed the amplitude cap.
struct MemoryCapError : std::length_error {
    using std::length_error::length_error;
};

/// Thrown when a sampled measurement branch has (numerically) zero weight.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MeasurementResult {
    int outcome;         // +1 or -1
    double probability;  // Born probability of the sampled outcome
};

/// Dense 2^n amplitude vector. Basis index bit q holds qubit q (qubit 1 is the least significant bit).
class StateVector {
   public:
    /// |0...0> on n qubits.
    explicit StateVector(std::size_t n_qubits, std::size_t max_qubits = kDefaultMaxQubits);
    static StateVector basis_state(std::size_t n_qubits, std::uint64_t index, std::size_t max_qubits = kDefaultMaxQubits);
    /// Takes ownership of the amplitudes and normalizes them; rejects zero vectors and non-power-of-two sizes.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes, std::size_t max_qubits = kDefaultMaxQubits);

    std::size_t n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude amplitude(std::uint64_t index) const { return amps_.at(index); }

    void apply_pauli(const PauliString &p);
    /// Applies ⊗_q exp(-i angles[q] σ^axis_q) exactly.
    void apply_axis_rotations(Axis axis, std::span<const double> angles);
    void apply_axis_rotation(Axis axis, std::size_t qubit, double angle);

    /// Born-samples the ±1 eigenvalue of a Hermitian Pauli `s` using exactly one uniform from `rng`
    /// and collapses onto the sampled eigenspace.
    MeasurementResult measure_stabilizer(const PauliString &s, Rng &rng);
    /// Projects onto the `outcome` eigenspace of `s`; returns the branch probability and renormalizes.
    double project(const PauliString &s, int outcome);
    /// Branch probability ||(I + outcome*s)/2 |psi>||^2 without collapsing.
    double outcome_probability(const PauliString &s, int outcome) const;

    Amplitude expectation(const PauliString &p) const;
    /// <this|other>
    Amplitude inner(const StateVector &other) const;
    double norm() const;
    void normalize();

   private:
    StateVector() = default;
    void check_size(std::size_t n) const;

    std::size_t n_ = 0;
    std::vector<Amplitude> amps_;
};

/// |<reference|state>|^2.
double fidelity(const StateVector &state, const StateVector &reference);
/// <reference| p |state> without materializing p|state>.
Amplitude pauli_matrix_element(const StateVector &reference, const PauliString &p, const StateVector &state);

}  // namespace cohqec

#endif
