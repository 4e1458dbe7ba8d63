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

#include "cohqec/codes.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "cohqec/rng.h"

namespace cohqec {
namespace {

// Symplectic parity computed directly from the bit masks.
bool anticommute(std::uint64_t ax, std::uint64_t az, const PauliString &b) {
    return (std::popcount(ax & b.z_bits()) + std::popcount(az & b.x_bits())) & 1;
}

// Smallest weight (up to max_w) of a Pauli commuting with all stabilizers and with a logical it anticommutes.
std::size_t brute_distance(const StabilizerCode &code, std::size_t max_w) {
    const std::uint64_t dim = std::uint64_t{1} << code.n_qubits;
    std::size_t best = 0;
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t z = 0; z < dim; ++z) {
            std::size_t w = std::popcount(x | z);
            if (w == 0 || w > max_w || (best && w >= best)) {
                continue;
            }
            bool in_normalizer = true;
            for (const auto &s : code.stabilizers) {
                in_normalizer = in_normalizer && !anticommute(x, z, s);
            }
            if (in_normalizer && (anticommute(x, z, code.logical_x) || anticommute(x, z, code.logical_z))) {
                best = w;
            }
        }
    }
    return best;
}

void expect_valid_code(const StabilizerCode &code) {
    ASSERT_EQ(code.stabilizers.size(), code.n_qubits - 1);
    ASSERT_EQ(code.stabilizer_types.size(), code.stabilizers.size());
    for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
        const auto &s = code.stabilizers[i];
        EXPECT_TRUE(s.is_hermitian());
        EXPECT_TRUE(code.stabilizer_types[i] == Axis::X ? s.z_bits() == 0 : s.x_bits() == 0);
        for (const auto &t : code.stabilizers) {
            EXPECT_TRUE(commutes(s, t));
        }
        EXPECT_TRUE(commutes(s, code.logical_x));
        EXPECT_TRUE(commutes(s, code.logical_z));
    }
    EXPECT_FALSE(commutes(code.logical_x, code.logical_z));
}

TEST(CodesTest, RepetitionLayout) {
    StabilizerCode c3 = repetition_code(3);
    EXPECT_EQ(c3.n_qubits, 3u);
    EXPECT_EQ(c3.distance, 3u);
    ASSERT_EQ(c3.stabilizers.size(), 2u);
    EXPECT_EQ(c3.stabilizers[0], PauliString::parse(3, "Z1 Z2"));
    EXPECT_EQ(c3.stabilizers[1], PauliString::parse(3, "Z2 Z3"));
    EXPECT_EQ(c3.logical_x, PauliString::parse(3, "X1 X2 X3"));
    EXPECT_EQ(c3.logical_z, PauliString::parse(3, "Z1"));
    StabilizerCode c5 = repetition_code(5);
    EXPECT_EQ(c5.stabilizers.size(), 4u);
    EXPECT_EQ(c5.logical_x.weight(), 5u);
    for (std::size_t d : {3, 5, 7, 9}) {
        expect_valid_code(repetition_code(d));
    }
    EXPECT_THROW(repetition_code(4), std::invalid_argument);
    EXPECT_THROW(repetition_code(1), std::invalid_argument);
}

TEST(CodesTest, SurfaceLayout) {
    StabilizerCode s = rotated_surface_code(3);
    EXPECT_EQ(s.n_qubits, 9u);
    std::size_t nx = 0, nz = 0;
    for (Axis t : s.stabilizer_types) {
        (t == Axis::X ? nx : nz)++;
    }
    EXPECT_EQ(nx, 4u);
    EXPECT_EQ(nz, 4u);
    // Z-type checks come first.
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(s.stabilizer_types[i], Axis::Z);
    }
    EXPECT_EQ(s.logical_x.weight(), 3u);
    EXPECT_EQ(s.logical_z.weight(), 3u);
    expect_valid_code(s);
    EXPECT_THROW(rotated_surface_code(5), std::invalid_argument);
    StabilizerCode s5 = rotated_surface_code(5, true);
    EXPECT_EQ(s5.n_qubits, 25u);
    expect_valid_code(s5);
}

TEST(CodesTest, DistanceMatchesExhaustiveSearch) {
    StabilizerCode s = rotated_surface_code(3);
    EXPECT_EQ(brute_distance(s, 3), 3u);
    EXPECT_EQ(min_logical_weight(s, 3), 3u);
    EXPECT_EQ(min_logical_weight(s, 2), 0u);
    for (std::size_t d : {3, 5}) {
        StabilizerCode r = repetition_code(d);
        // Z̄ = Z1 has weight 1; the X distance is d.
        EXPECT_EQ(brute_distance(r, d), 1u);
        EXPECT_EQ(min_logical_weight(r, d), 1u);
    }
}

TEST(CodesTest, ParseTokens) {
    EXPECT_EQ(parse_code("rep:5").n_qubits, 5u);
    EXPECT_EQ(parse_code("surface:3").n_qubits, 9u);
    EXPECT_THROW(parse_code("surface:5"), std::invalid_argument);
    EXPECT_EQ(parse_code("surface:5", true).n_qubits, 25u);
    EXPECT_THROW(parse_code("rep"), std::invalid_argument);
    EXPECT_THROW(parse_code("rep:x"), std::invalid_argument);
    EXPECT_THROW(parse_code("color:3"), std::invalid_argument);
}

TEST(CodesTest, SyndromeIsHomomorphism) {
    StabilizerCode s = rotated_surface_code(3);
    Rng rng(42);
    for (int i = 0; i < 500; ++i) {
        PauliString a(9, rng.next_u64() & 0x1ff, rng.next_u64() & 0x1ff);
        PauliString b(9, rng.next_u64() & 0x1ff, rng.next_u64() & 0x1ff);
        EXPECT_EQ(syndrome_of(s, a * b), syndrome_of(s, a) ^ syndrome_of(s, b));
    }
    EXPECT_EQ(syndrome_of(s, PauliString::identity(9)).bits, 0u);
}

TEST(CodesTest, LogicalBasisStates) {
    StabilizerCode r = repetition_code(3);
    StateVector zero = logical_basis_state(r, LogicalBasis::zero);
    EXPECT_NEAR(std::abs(zero.amplitude(0)), 1.0, 1e-12);
    StateVector plus = logical_basis_state(r, LogicalBasis::plus);
    EXPECT_NEAR(std::abs(plus.amplitude(0)), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(plus.amplitude(7)), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(plus.amplitude(0) - plus.amplitude(7)), 0.0, 1e-12);

    StabilizerCode s = rotated_surface_code(3);
    for (LogicalBasis which : {LogicalBasis::zero, LogicalBasis::plus}) {
        StateVector v = logical_basis_state(s, which);
        EXPECT_NEAR(v.norm(), 1.0, 1e-12);
        for (const auto &stab : s.stabilizers) {
            EXPECT_NEAR(v.expectation(stab).real(), 1.0, 1e-10);
        }
        const PauliString &logical = which == LogicalBasis::zero ? s.logical_z : s.logical_x;
        EXPECT_NEAR(v.expectation(logical).real(), 1.0, 1e-10);
    }
}

TEST(CodesTest, DestabilizersAndFrames) {
    for (const StabilizerCode &code : {repetition_code(5), rotated_surface_code(3)}) {
        auto destabs = destabilizers(code);
        ASSERT_EQ(destabs.size(), code.stabilizers.size());
        for (std::size_t i = 0; i < destabs.size(); ++i) {
            SyndromeRecord syn = syndrome_of(code, destabs[i]);
            EXPECT_EQ(syn.bits, std::uint64_t{1} << i);
            EXPECT_TRUE(commutes(destabs[i], code.logical_x));
            EXPECT_TRUE(commutes(destabs[i], code.logical_z));
        }
        std::uint64_t count = std::uint64_t{1} << code.stabilizers.size();
        for (std::uint64_t bits = 0; bits < count; ++bits) {
            SyndromeRecord target{bits, code.stabilizers.size()};
            EXPECT_EQ(syndrome_of(code, frame_for_syndrome(code, destabs, target)), target);
        }
    }
}

TEST(CodesTest, RandomCodespaceForcedZero) {
    StabilizerCode r = repetition_code(3);
    // mix64(0) == 0, so this key makes the first draw all-zero bits.
    Rng rng(std::uint64_t{0} - Rng::kGolden);
    RandomCodespace rc = random_codespace_init(r, LogicalBasis::zero, rng);
    EXPECT_TRUE(rc.syndrome.is_zero());
    EXPECT_EQ(rc.frame, PauliString::identity(3));
}

void check_codespace(const StabilizerCode &code, const RandomCodespace &rc, LogicalBasis which) {
    for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
        double expected = rc.syndrome.bit(i) ? -1.0 : 1.0;
        ASSERT_NEAR(rc.state.expectation(code.stabilizers[i]).real(), expected, 1e-10);
    }
    StateVector framed = logical_basis_state(code, which);
    framed.apply_pauli(rc.frame);
    ASSERT_NEAR(fidelity(rc.state, framed), 1.0, 1e-10);
    ASSERT_EQ(syndrome_of(code, rc.frame), rc.syndrome);
}

TEST(CodesTest, RandomCodespaceFrameMethod) {
    StabilizerCode r = repetition_code(3);
    std::vector<int> counts(4, 0);
    const int seeds = 10000;
    for (int seed = 0; seed < seeds; ++seed) {
        Rng rng = Rng::for_stream(seed, 0, 0, StreamPurpose::codespace_init);
        RandomCodespace rc = random_codespace_init(r, LogicalBasis::zero, rng);
        if (seed < 200) {
            check_codespace(r, rc, LogicalBasis::zero);
        }
        counts[rc.syndrome.bits]++;
    }
    double sigma = std::sqrt(seeds * 0.25 * 0.75);
    for (int c : counts) {
        EXPECT_NEAR(c, seeds / 4.0, 5 * sigma);
    }
    StabilizerCode s = rotated_surface_code(3);
    for (int seed = 0; seed < 50; ++seed) {
        Rng rng = Rng::for_stream(seed, 1, 0, StreamPurpose::codespace_init);
        check_codespace(s, random_codespace_init(s, LogicalBasis::plus, rng), LogicalBasis::plus);
    }
}

TEST(CodesTest, RandomCodespaceProductMethodMatchesDistribution) {
    StabilizerCode s = rotated_surface_code(3);
    std::vector<int> counts(256, 0);
    const int seeds = 16000;
    for (int seed = 0; seed < seeds; ++seed) {
        Rng rng = Rng::for_stream(seed, 2, 0, StreamPurpose::codespace_init);
        LogicalBasis which = seed % 2 ? LogicalBasis::plus : LogicalBasis::zero;
        RandomCodespace rc = random_codespace_init_product(s, which, rng);
        if (seed < 100) {
            check_codespace(s, rc, which);
        }
        counts[rc.syndrome.bits]++;
    }
    // Uniform over the 2^8 syndromes: Pearson chi-square with 255 dof, mean 255, sd ~22.6.
    double expected = seeds / 256.0;
    double chi2 = 0;
    for (int c : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    EXPECT_LT(chi2, 255 + 5 * std::sqrt(2 * 255.0));
}

}  // namespace
}  // namespace cohqec
