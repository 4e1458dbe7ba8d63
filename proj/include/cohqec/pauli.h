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

#ifndef COHQEC_PAULI_H
#define COHQEC_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cohqec {

/// Rotation / error axis. Y is not modelled; Z stands in for any axis orthogonal to X.
enum class Axis { X, Z };

inline char axis_letter(Axis a) { return a == Axis::X ? 'X' : 'Z'; }
/// The axis whose errors anticommute with this axis' logical partner (X <-> Z).
inline Axis other_axis(Axis a) { return a == Axis::X ? Axis::Z : Axis::X; }

/// Maximum number of qubits a PauliString can address (one machine word per component).
inline constexpr std::size_t kMaxPauliQubits = 64;

/// An n-qubit Pauli operator in symplectic form, i^phase * P_1 ⊗ ... ⊗ P_n.
///
/// Bit q of `x_bits`/`z_bits` is qubit q (0-based internally, rendered 1-based).
/// The per-qubit letter is I (0,0), X (1,0), Z (0,1) or Y (1,1) where Y is the
/// Hermitian Pauli-Y matrix, so products follow the standard matrix identities
/// (X·Z = -iY, Z·X = iY).
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t n_qubits);
    PauliString(std::size_t n_qubits, std::uint64_t x_bits, std::uint64_t z_bits, unsigned phase = 0);

    static PauliString identity(std::size_t n_qubits) { return PauliString(n_qubits); }
    /// Single-qubit letter ('X', 'Y' or 'Z') on 0-based qubit `q`.
    static PauliString single(std::size_t n_qubits, std::size_t q, char letter);
    /// The same letter on every qubit of `support_mask`.
    static PauliString on_support(std::size_t n_qubits, std::uint64_t support_mask, char letter);
    /// Dense form "XIZY" (qubit 1 first), optionally prefixed by "+", "-", "i", "-i".
    static PauliString from_dense(std::string_view text);
    /// Sparse form "X1 Z3 Y4" (1-indexed), optionally prefixed as in from_dense; "I" is identity.
    static PauliString parse(std::size_t n_qubits, std::string_view text);

    std::size_t n_qubits() const { return n_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }
    /// Exponent k of the global factor i^k, in [0, 4).
    unsigned phase() const { return phase_; }

    bool x(std::size_t q) const { return (x_ >> q) & 1; }
    bool z(std::size_t q) const { return (z_ >> q) & 1; }
    char letter(std::size_t q) const;

    std::uint64_t support() const { return x_ | z_; }
    std::size_t weight() const;
    bool is_identity_up_to_phase() const { return support() == 0; }
    /// True for phase ±1.
    bool is_hermitian() const { return (phase_ & 1) == 0; }

    PauliString with_phase(unsigned phase) const { return PauliString(n_, x_, z_, phase); }
    PauliString adjoint() const { return PauliString(n_, x_, z_, (4 - phase_) & 3); }

    PauliString operator*(const PauliString &rhs) const;
    PauliString &operator*=(const PauliString &rhs);
    bool operator==(const PauliString &other) const = default;

    /// Equality ignoring the global phase.
    bool same_letters(const PauliString &other) const {
        return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
    }

    /// "X1 Z3 Y4", with a "-", "i " or "-i " prefix for non-unit phases and "I" for identity.
    std::string str() const;
    std::string dense_str() const;

   private:
    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    unsigned phase_ = 0;
};

PauliString pauli_mul(const PauliString &a, const PauliString &b);
bool commutes(const PauliString &a, const PauliString &b);
inline std::size_t weight(const PauliString &a) { return a.weight(); }

std::ostream &operator<<(std::ostream &out, const PauliString &p);

}  // namespace cohqec

#endif
