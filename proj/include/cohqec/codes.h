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

#ifndef COHQEC_CODES_H
#define COHQEC_CODES_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cohqec/pauli.h"
#include "cohqec/rng.h"
#include "cohqec/statevec.h"

namespace cohqec {

/// One bit per stabilizer generator, in the code's stabilizer order; 1 means eigenvalue -1.
struct SyndromeRecord {
    std::uint64_t bits = 0;
    std::size_t length = 0;

    bool bit(std::size_t i) const { return (bits >> i) & 1; }
    bool is_zero() const { return bits == 0; }
    SyndromeRecord operator^(const SyndromeRecord &other) const;
    bool operator==(const SyndromeRecord &other) const = default;
    /// Bit string, stabilizer 1 first.
    std::string str() const;
};

/// A [[n, 1, d]] CSS stabilizer code.
///
/// Stabilizers are stored Z-type first, then X-type, each group in construction order;
/// this is also the measurement order and the bit order of every SyndromeRecord.
struct StabilizerCode {
    std::string name;
    std::size_t n_qubits = 0;
    std::size_t k_logical = 1;
    std::size_t distance = 0;
    std::vector<PauliString> stabilizers;
    /// Letter of each stabilizer (all generators are single-letter).
    std::vector<Axis> stabilizer_types;
    PauliString logical_x;
    PauliString logical_z;

    std::size_t num_stabilizers() const { return stabilizers.size(); }
    /// Indices of the stabilizers that anticommute with single-qubit errors along `error_axis`.
    std::vector<std::size_t> stabilizers_detecting(Axis error_axis) const;
    const PauliString &logical(Axis axis) const { return axis == Axis::X ? logical_x : logical_z; }
};

/// Bit-flip repetition code: stabilizers Z_i Z_{i+1}, X̄ = X^⊗d, Z̄ = Z_1. Requires odd d >= 3.
StabilizerCode repetition_code(std::size_t d);

/// Rotated surface code on a d x d grid, qubit (row, col) at index row*d + col.
///
/// Weight-4 plaquette (i, j) covers rows i..i+1 and columns j..j+1 and is X-type when i+j is even.
/// Weight-2 X checks sit on the top and bottom boundaries, Z checks on the left and right.
/// X̄ runs down column 1, Z̄ along row 1. d = 3 always; d >= 5 only with `allow_large`.
StabilizerCode rotated_surface_code(std::size_t d, bool allow_large = false);

/// "rep:<d>" or "surface:<d>".
StabilizerCode parse_code(std::string_view token, bool allow_large = false);

SyndromeRecord syndrome_of(const StabilizerCode &code, const PauliString &error);

/// Minimum weight of a Pauli that commutes with every stabilizer and anticommutes with a logical;
/// searches weights 1..max_weight and returns 0 if none was found.
std::size_t min_logical_weight(const StabilizerCode &code, std::size_t max_weight);

enum class LogicalBasis { zero, plus };

/// |0̄> or |+̄> in the zero-syndrome subspace, obtained by projecting |0...0> or |+...+>.
StateVector logical_basis_state(const StabilizerCode &code, LogicalBasis which, std::size_t max_qubits = kDefaultMaxQubits);

/// For each stabilizer i, a minimum-weight single-letter Pauli with syndrome e_i that commutes with both logicals.
std::vector<PauliString> destabilizers(const StabilizerCode &code);

/// Product of the destabilizers selected by `syndrome`; its syndrome equals `syndrome`.
PauliString frame_for_syndrome(const StabilizerCode &code, const std::vector<PauliString> &destabs, const SyndromeRecord &syndrome);

struct RandomCodespace {
    StateVector state;
    SyndromeRecord syndrome;
    /// state == frame · logical_basis_state (up to global phase). The frame method always returns a
    /// frame that commutes with both logicals.
    PauliString frame;
};

/// Frame method: draws a uniform syndrome from one 64-bit word of `rng` (bit i for stabilizer i)
/// and applies the matching destabilizer product to the logical basis state.
RandomCodespace random_codespace_init(const StabilizerCode &code, LogicalBasis which, Rng &rng,
                                      std::size_t max_qubits = kDefaultMaxQubits);

/// Product-state method: random |0>/|1> (or |+>/|->) per qubit, then every stabilizer measured in order.
/// The logical value picked by the collapse is folded into the returned frame.
RandomCodespace random_codespace_init_product(const StabilizerCode &code, LogicalBasis which, Rng &rng,
                                              std::size_t max_qubits = kDefaultMaxQubits);

}  // namespace cohqec

#endif
