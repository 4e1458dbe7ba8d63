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

#include "cohqec/statevec.h"

#include <bit>
#include <algorithm>
#include <cmath>
#include <string>

namespace cohqec {

namespace {

constexpr double kMinBranchProbability = 1e-14;

// i^k for k in [0, 4).
Amplitude i_power(unsigned k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

// The operator i^phase ⊗letters equals i^(phase + |x&z|) X^x Z^z since Y = iXZ.
Amplitude pauli_prefactor(const PauliString &p) {
    return i_power(p.phase() + static_cast<unsigned>(std::popcount(p.x_bits() & p.z_bits())));
}

double parity_sign(std::uint64_t index, std::uint64_t z_mask) {
    return (std::popcount(index & z_mask) & 1) ? -1.0 : 1.0;
}

}  // namespace

void StateVector::check_size(std::size_t n) const {
    if (n != n_) {
        throw std::invalid_argument(
            "StateVector size mismatch: state has " + std::to_string(n_) + " qubits, operand has " + std::to_string(n));
    }
}

StateVector::StateVector(std::size_t n_qubits, std::size_t max_qubits) : n_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("StateVector needs at least one qubit");
    }
    if (n_qubits > max_qubits || n_qubits > kMaxPauliQubits) {
        throw MemoryCapError(
            "StateVector: " + std::to_string(n_qubits) + " qubits exceeds the cap of " + std::to_string(max_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, Amplitude{});
    amps_[0] = 1.0;
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::uint64_t index, std::size_t max_qubits) {
    StateVector s(n_qubits, max_qubits);
    if (index >= s.dim()) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes, std::size_t max_qubits) {
    std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("from_amplitudes: size must be a power of two >= 2");
    }
    std::size_t n = static_cast<std::size_t>(std::countr_zero(dim));
    if (n > max_qubits) {
        throw MemoryCapError("from_amplitudes: exceeds qubit cap");
    }
    StateVector s;
    s.n_ = n;
    s.amps_ = std::move(amplitudes);
    if (s.norm() == 0.0) {
        throw std::invalid_argument("from_amplitudes: zero vector");
    }
    s.normalize();
    return s;
}

void StateVector::apply_pauli(const PauliString &p) {
    check_size(p.n_qubits());
    const Amplitude f = pauli_prefactor(p);
    const std::uint64_t xm = p.x_bits();
    const std::uint64_t zm = p.z_bits();
    const std::uint64_t dim = amps_.size();
    if (xm == 0) {
        for (std::uint64_t j = 0; j < dim; ++j) {
            amps_[j] *= f * parity_sign(j, zm);
        }
        return;
    }
    for (std::uint64_t j = 0; j < dim; ++j) {
        std::uint64_t k = j ^ xm;
        if (k < j) {
            continue;
        }
        Amplitude a = amps_[j];
        Amplitude b = amps_[k];
        amps_[k] = f * parity_sign(j, zm) * a;
        amps_[j] = f * parity_sign(k, zm) * b;
    }
}

void StateVector::apply_axis_rotation(Axis axis, std::size_t qubit, double angle) {
    if (qubit >= n_) {
        throw std::invalid_argument("apply_axis_rotation: qubit out of range");
    }
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("apply_axis_rotation: non-finite angle");
    }
    if (angle == 0.0) {
        return;
    }
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    const std::uint64_t dim = amps_.size();
    if (axis == Axis::X) {
        const Amplitude mis{0.0, -s};
        for (std::uint64_t base = 0; base < dim; base += 2 * bit) {
            for (std::uint64_t j = base; j < base + bit; ++j) {
                Amplitude a = amps_[j];
                Amplitude b = amps_[j | bit];
                amps_[j] = c * a + mis * b;
                amps_[j | bit] = mis * a + c * b;
            }
        }
    } else {
        const Amplitude down{c, -s};
        const Amplitude up{c, s};
        for (std::uint64_t j = 0; j < dim; ++j) {
            amps_[j] *= (j & bit) ? up : down;
        }
    }
}

void StateVector::apply_axis_rotations(Axis axis, std::span<const double> angles) {
    if (angles.size() != n_) {
        throw std::invalid_argument(
            "apply_axis_rotations: expected " + std::to_string(n_) + " angles, got " + std::to_string(angles.size()));
    }
    for (double a : angles) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("apply_axis_rotations: non-finite angle");
        }
    }
    for (std::size_t q = 0; q < n_; ++q) {
        apply_axis_rotation(axis, q, angles[q]);
    }
}

Amplitude StateVector::expectation(const PauliString &p) const { return pauli_matrix_element(*this, p, *this); }

double StateVector::outcome_probability(const PauliString &s, int outcome) const {
    check_size(s.n_qubits());
    if (!s.is_hermitian()) {
        throw std::invalid_argument("measured Pauli must be Hermitian (phase ±1)");
    }
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("outcome must be +1 or -1");
    }
    double e = expectation(s).real();
    double p = 0.5 * (1.0 + outcome * e);
    return std::clamp(p, 0.0, 1.0);
}

double StateVector::project(const PauliString &s, int outcome) {
    double prob = outcome_probability(s, outcome);
    if (prob < kMinBranchProbability) {
        throw NumericalError("projection onto " + s.str() + " = " + std::to_string(outcome) +
                             " has vanishing probability " + std::to_string(prob));
    }
    const double sign = outcome * ((s.phase() == 2) ? -1.0 : 1.0);
    const std::uint64_t xm = s.x_bits();
    const std::uint64_t zm = s.z_bits();
    // Real prefactor of s restricted to letters: i^|x&z| times the sign above.
    const Amplitude f = sign * i_power(static_cast<unsigned>(std::popcount(xm & zm)));
    const double scale = 1.0 / std::sqrt(prob);
    const std::uint64_t dim = amps_.size();
    if (xm == 0) {
        for (std::uint64_t j = 0; j < dim; ++j) {
            // f is real here because x&z is empty.
            bool keep = f.real() * parity_sign(j, zm) > 0;
            amps_[j] = keep ? amps_[j] * scale : Amplitude{};
        }
        return prob;
    }
    for (std::uint64_t j = 0; j < dim; ++j) {
        std::uint64_t k = j ^ xm;
        if (k < j) {
            continue;
        }
        Amplitude a = amps_[j];
        Amplitude b = amps_[k];
        // (s psi)_k = f * sign(j) * psi_j and (s psi)_j = f * sign(k) * psi_k.
        Amplitude new_j = 0.5 * (a + f * parity_sign(k, zm) * b);
        Amplitude new_k = 0.5 * (b + f * parity_sign(j, zm) * a);
        amps_[j] = new_j * scale;
        amps_[k] = new_k * scale;
    }
    return prob;
}

MeasurementResult StateVector::measure_stabilizer(const PauliString &s, Rng &rng) {
    double p_plus = outcome_probability(s, +1);
    double u = rng.uniform();
    int outcome = u < p_plus ? +1 : -1;
    double prob = project(s, outcome);
    return {outcome, prob};
}

Amplitude StateVector::inner(const StateVector &other) const {
    check_size(other.n_);
    Amplitude acc{};
    for (std::size_t j = 0; j < amps_.size(); ++j) {
        acc += std::conj(amps_[j]) * other.amps_[j];
    }
    return acc;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const Amplitude &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

void StateVector::normalize() {
    double nrm = norm();
    if (nrm == 0.0) {
        throw NumericalError("cannot normalize a zero state");
    }
    double inv = 1.0 / nrm;
    for (Amplitude &a : amps_) {
        a *= inv;
    }
}

double fidelity(const StateVector &state, const StateVector &reference) { return std::norm(reference.inner(state)); }

Amplitude pauli_matrix_element(const StateVector &reference, const PauliString &p, const StateVector &state) {
    if (reference.n_qubits() != p.n_qubits() || state.n_qubits() != p.n_qubits()) {
        throw std::invalid_argument("pauli_matrix_element: size mismatch");
    }
    const Amplitude f = pauli_prefactor(p);
    const std::uint64_t xm = p.x_bits();
    const std::uint64_t zm = p.z_bits();
    auto ref = reference.amplitudes();
    auto psi = state.amplitudes();
    Amplitude acc{};
    for (std::uint64_t j = 0; j < psi.size(); ++j) {
        acc += std::conj(ref[j ^ xm]) * parity_sign(j, zm) * psi[j];
    }
    return f * acc;
}

}  // namespace cohqec
