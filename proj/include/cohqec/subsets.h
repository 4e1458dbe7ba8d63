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

#ifndef COHQEC_SUBSETS_H
#define COHQEC_SUBSETS_H

#include <cstdint>
#include <vector>

namespace cohqec {

/// Calls `visit(mask)` for every k-subset of {0..n-1} in lexicographic order of the sorted
/// index lists ({0,1} < {0,2} < ... < {1,2}). Stops early when `visit` returns false.
template <typename Visit>
bool for_each_subset_lex(std::size_t n, std::size_t k, Visit &&visit) {
    if (k > n) {
        return true;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = i;
    }
    while (true) {
        std::uint64_t mask = 0;
        for (std::size_t i : idx) {
            mask |= std::uint64_t{1} << i;
        }
        if (!visit(mask)) {
            return false;
        }
        // Advance the rightmost index that still has room.
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return true;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace cohqec

#endif
