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

#include "cohqec/decoder.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "cohqec/subsets.h"

namespace cohqec {

LookupDecoder::LookupDecoder(const StabilizerCode &code, Axis axis)
    : axis_(axis), n_(code.n_qubits), full_length_(code.num_stabilizers()), checks_(code.stabilizers_detecting(axis)) {
    if (checks_.size() > kMaxLookupChecks) {
        throw std::length_error("lookup table would need 2^" + std::to_string(checks_.size()) + " entries (cap 2^" +
                                std::to_string(kMaxLookupChecks) + ")");
    }
    for (std::size_t i : checks_) {
        check_supports_.push_back(code.stabilizers[i].support());
    }
    const std::size_t entries = std::size_t{1} << checks_.size();
    std::vector<bool> filled(entries, false);
    table_.assign(entries, PauliString::identity(n_));
    std::size_t remaining = entries;
    const char letter = axis_letter(axis);
    // Breadth-first by weight; lexicographic order inside a weight gives the tie-break.
    for (std::size_t w = 0; w <= n_ && remaining > 0; ++w) {
        for_each_subset_lex(n_, w, [&](std::uint64_t support) {
            std::uint64_t key = syndrome_of_support(support).bits;
            if (!filled[key]) {
                filled[key] = true;
                table_[key] = PauliString::on_support(n_, support, letter);
                --remaining;
            }
            return remaining > 0;
        });
    }
    if (remaining > 0) {
        throw std::logic_error("lookup decoder: some syndromes are unreachable (dependent checks?)");
    }
}

SyndromeRecord LookupDecoder::syndrome_of_support(std::uint64_t support) const {
    SyndromeRecord s{0, checks_.size()};
    for (std::size_t j = 0; j < check_supports_.size(); ++j) {
        if (std::popcount(check_supports_[j] & support) & 1) {
            s.bits |= std::uint64_t{1} << j;
        }
    }
    return s;
}

std::size_t LookupDecoder::max_correction_weight() const {
    std::size_t w = 0;
    for (const auto &p : table_) {
        w = std::max(w, p.weight());
    }
    return w;
}

PauliString LookupDecoder::decode(const SyndromeRecord &restricted) const {
    if (restricted.length != checks_.size()) {
        throw std::invalid_argument("decode: syndrome has " + std::to_string(restricted.length) + " bits, decoder expects " +
                                    std::to_string(checks_.size()));
    }
    return table_[restricted.bits];
}

SyndromeRecord LookupDecoder::restrict(const SyndromeRecord &full) const {
    if (full.length != full_length_) {
        throw std::invalid_argument("restrict: syndrome length does not match the code");
    }
    SyndromeRecord r{0, checks_.size()};
    for (std::size_t j = 0; j < checks_.size(); ++j) {
        if (full.bit(checks_[j])) {
            r.bits |= std::uint64_t{1} << j;
        }
    }
    return r;
}

PauliString LookupDecoder::decode_full(const SyndromeRecord &full) const { return decode(restrict(full)); }

LookupDecoder build_lookup_decoder(const StabilizerCode &code, Axis axis) { return LookupDecoder(code, axis); }

bool is_malignant(const StabilizerCode &code, const LookupDecoder &decoder, std::uint64_t support) {
    PauliString error = PauliString::on_support(code.n_qubits, support, axis_letter(decoder.axis()));
    PauliString residual = error * decoder.decode(decoder.syndrome_of_support(support));
    return !commutes(residual, code.logical(other_axis(decoder.axis())));
}

MalignantCounts enumerate_malignant_sets(const StabilizerCode &code, const LookupDecoder &decoder, Axis axis) {
    if (decoder.axis() != axis) {
        throw std::invalid_argument("enumerate_malignant_sets: decoder axis differs from requested axis");
    }
    if (code.n_qubits > 25 || code.distance > 7) {
        throw std::length_error("malignant-set enumeration is capped at n <= 25 and d <= 7");
    }
    MalignantCounts counts;
    counts.set_size = (code.distance + 1) / 2;
    std::unordered_set<std::uint64_t> proper_subsets;
    for_each_subset_lex(code.n_qubits, counts.set_size, [&](std::uint64_t support) {
        if (is_malignant(code, decoder, support)) {
            counts.witnesses.push_back(support);
            // Every submask except the set itself, the empty set included.
            std::uint64_t sub = support;
            while (true) {
                sub = (sub - 1) & support;
                proper_subsets.insert(sub);
                if (sub == 0) {
                    break;
                }
            }
        }
        return true;
    });
    counts.a_d = counts.witnesses.size();
    counts.b_d = proper_subsets.size();
    return counts;
}

}  // namespace cohqec
