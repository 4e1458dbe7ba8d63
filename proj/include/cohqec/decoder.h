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

#ifndef COHQEC_DECODER_H
#define COHQEC_DECODER_H

#include <cstdint>
#include <string>
#include <vector>

#include "cohqec/codes.h"
#include "cohqec/pauli.h"

namespace cohqec {

/// Largest number of checks a lookup table may be keyed on (2^20 entries).
inline constexpr std::size_t kMaxLookupChecks = 20;

/// Minimum-weight lookup decoder for errors along one axis.
///
/// Keys are syndromes restricted to the checks that detect `axis` errors (bit j = j-th such
/// check in code order). Among equal-weight corrections the lexicographically smallest sorted
/// support wins.
class LookupDecoder {
   public:
    static constexpr const char *kTieBreakRule = "min-weight; ties -> lexicographically smallest sorted qubit support";

    LookupDecoder(const StabilizerCode &code, Axis axis);

    Axis axis() const { return axis_; }
    std::size_t n_qubits() const { return n_; }
    const std::vector<std::size_t> &check_indices() const { return checks_; }
    std::size_t key_length() const { return checks_.size(); }
    const std::vector<PauliString> &table() const { return table_; }
    std::size_t max_correction_weight() const;

    /// Looks up a restricted syndrome (length == key_length()).
    PauliString decode(const SyndromeRecord &restricted) const;
    /// Restricts a full-code syndrome to this decoder's checks and looks it up.
    PauliString decode_full(const SyndromeRecord &full) const;
    SyndromeRecord restrict(const SyndromeRecord &full) const;
    /// Restricted syndrome of an error along this decoder's axis on `support`.
    SyndromeRecord syndrome_of_support(std::uint64_t support) const;

   private:
    Axis axis_;
    std::size_t n_;
    std::size_t full_length_;
    std::vector<std::size_t> checks_;
    std::vector<std::uint64_t> check_supports_;
    std::vector<PauliString> table_;
};

LookupDecoder build_lookup_decoder(const StabilizerCode &code, Axis axis);
inline PauliString decode(const LookupDecoder &decoder, const SyndromeRecord &restricted) {
    return decoder.decode(restricted);
}

/// Lowest-weight malignant sets for errors along `axis`.
struct MalignantCounts {
    /// Number of malignant qubit sets of size ceil(d/2).
    std::size_t a_d = 0;
    /// Number of distinct proper subsets (the empty set included) of those sets.
    std::size_t b_d = 0;
    std::size_t set_size = 0;
    /// Supports of the malignant sets, in lexicographic order.
    std::vector<std::uint64_t> witnesses;
};

/// True if an `axis` error on `support` followed by decode-and-correct leaves a nontrivial logical.
bool is_malignant(const StabilizerCode &code, const LookupDecoder &decoder, std::uint64_t support);

/// Enumerates all qubit subsets of size (d+1)/2. Requires n <= 25 and d <= 7.
MalignantCounts enumerate_malignant_sets(const StabilizerCode &code, const LookupDecoder &decoder, Axis axis);

}  // namespace cohqec

#endif
