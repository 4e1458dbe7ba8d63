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

#include "cohqec/pauli.h"

#include <gtest/gtest.h>

#include <array>
#include <complex>
#include <sstream>

#include "cohqec/statevec.h"

namespace cohqec {
namespace {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

const C kI{0, 1};

// Textbook single-qubit matrices, indexed [row][col].
Mat letter_matrix(char l) {
    switch (l) {
        case 'X':
            return {{0, 1}, {1, 0}};
        case 'Y':
            return {{0, -kI}, {kI, 0}};
        case 'Z':
            return {{1, 0}, {0, -1}};
        default:
            return {{1, 0}, {0, 1}};
    }
}

C phase_factor(unsigned k) {
    const C table[4] = {1, kI, -1, -kI};
    return table[k & 3];
}

// Dense matrix of a Pauli string; basis index bit q is qubit q.
Mat dense(const PauliString &p) {
    std::size_t n = p.n_qubits();
    std::size_t dim = std::size_t{1} << n;
    Mat m(dim, std::vector<C>(dim, 0));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            C v = phase_factor(p.phase());
            for (std::size_t q = 0; q < n; ++q) {
                v *= letter_matrix(p.letter(q))[(r >> q) & 1][(c >> q) & 1];
            }
            m[r][c] = v;
        }
    }
    return m;
}

Mat matmul(const Mat &a, const Mat &b) {
    std::size_t d = a.size();
    Mat m(d, std::vector<C>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t j = 0; j < d; ++j) {
                m[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return m;
}

bool close(const Mat &a, const Mat &b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (std::abs(a[i][j] - b[i][j]) > 1e-12) {
                return false;
            }
        }
    }
    return true;
}

std::vector<PauliString> all_paulis(std::size_t n) {
    std::vector<PauliString> out;
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < limit; ++x) {
        for (std::uint64_t z = 0; z < limit; ++z) {
            for (unsigned ph = 0; ph < 4; ++ph) {
                out.emplace_back(n, x, z, ph);
            }
        }
    }
    return out;
}

TEST(PauliTest, LetterEncodingMatchesMatrices) {
    EXPECT_EQ(PauliString(1, 1, 0).letter(0), 'X');
    EXPECT_EQ(PauliString(1, 0, 1).letter(0), 'Z');
    EXPECT_EQ(PauliString(1, 1, 1).letter(0), 'Y');
    EXPECT_EQ(PauliString(1, 0, 0).letter(0), 'I');
}

TEST(PauliTest, ExhaustiveProductsMatchMatrixAlgebra) {
    for (std::size_t n : {1, 2}) {
        auto ps = all_paulis(n);
        for (const auto &a : ps) {
            for (const auto &b : ps) {
                PauliString prod = pauli_mul(a, b);
                ASSERT_TRUE(close(dense(prod), matmul(dense(a), dense(b)))) << a << " * " << b << " = " << prod;
                bool anti = close(matmul(dense(a), dense(b)), [&] {
                    Mat m = matmul(dense(b), dense(a));
                    for (auto &row : m) {
                        for (auto &v : row) {
                            v = -v;
                        }
                    }
                    return m;
                }());
                ASSERT_EQ(commutes(a, b), !anti) << a << " vs " << b;
                ASSERT_EQ(commutes(a, b), commutes(b, a));
                ASSERT_LE(weight(prod), weight(a) + weight(b));
            }
        }
    }
}

TEST(PauliTest, DenseEngineAgreesWithMatrices) {
    for (const auto &p : all_paulis(2)) {
        Mat m = dense(p);
        for (std::uint64_t col = 0; col < 4; ++col) {
            StateVector s = StateVector::basis_state(2, col);
            s.apply_pauli(p);
            for (std::uint64_t row = 0; row < 4; ++row) {
                ASSERT_LT(std::abs(s.amplitude(row) - m[row][col]), 1e-12) << p;
            }
        }
    }
}

TEST(PauliTest, Associative) {
    auto ps = all_paulis(1);
    for (const auto &a : ps) {
        for (const auto &b : ps) {
            for (const auto &c : ps) {
                ASSERT_EQ((a * b) * c, a * (b * c));
            }
        }
    }
}

TEST(PauliTest, SpecExamples) {
    EXPECT_EQ(PauliString::parse(2, "X1") * PauliString::parse(2, "X2"), PauliString::parse(2, "X1 X2"));
    PauliString xz = PauliString::parse(1, "X1") * PauliString::parse(1, "Z1");
    EXPECT_EQ(xz.letter(0), 'Y');
    EXPECT_EQ(xz.phase(), 3u);  // -i
    for (const auto &p : all_paulis(2)) {
        if (p.is_hermitian()) {
            EXPECT_EQ(p * p, PauliString::identity(2));
        }
    }
    EXPECT_FALSE(commutes(PauliString::parse(2, "X1"), PauliString::parse(2, "Z1")));
    EXPECT_TRUE(commutes(PauliString::parse(2, "X1 X2"), PauliString::parse(2, "Z1 Z2")));
    EXPECT_TRUE(commutes(PauliString::parse(3, "X1 Y2 Z3"), PauliString::identity(3)));
    EXPECT_EQ(weight(PauliString::identity(4)), 0u);
    EXPECT_EQ(weight(PauliString::parse(5, "X1 Z3")), 2u);
    EXPECT_EQ(weight(PauliString::on_support(7, 0x7f, 'X')), 7u);
}

TEST(PauliTest, TextRoundTrip) {
    for (const auto &p : all_paulis(2)) {
        EXPECT_EQ(PauliString::parse(2, p.str()), p) << p.str();
        EXPECT_EQ(PauliString::from_dense(p.dense_str()), p) << p.dense_str();
    }
    EXPECT_EQ(PauliString::parse(5, "X1 Z3").str(), "X1 Z3");
    EXPECT_EQ(PauliString::identity(3).str(), "I");
    EXPECT_EQ(PauliString::from_dense("-iXIZ"), PauliString::parse(3, "X1 Z3").with_phase(3));
    std::ostringstream os;
    os << PauliString::parse(4, "Y4");
    EXPECT_EQ(os.str(), "Y4");
}

TEST(PauliTest, AdjointInvertsProduct) {
    for (const auto &p : all_paulis(1)) {
        EXPECT_EQ(p * p.adjoint(), PauliString::identity(1));
    }
}

TEST(PauliTest, WideStrings) {
    PauliString a = PauliString::single(64, 63, 'X');
    PauliString b = PauliString::single(64, 63, 'Z');
    EXPECT_FALSE(commutes(a, b));
    EXPECT_EQ((a * b).letter(63), 'Y');
    EXPECT_EQ(weight(PauliString::on_support(64, ~std::uint64_t{0}, 'Z')), 64u);
}

TEST(PauliTest, RejectsBadInput) {
    EXPECT_THROW(PauliString(0), std::invalid_argument);
    EXPECT_THROW(PauliString(65), std::invalid_argument);
    EXPECT_THROW(PauliString(2, 0b100, 0), std::invalid_argument);
    EXPECT_THROW(pauli_mul(PauliString(2), PauliString(3)), std::invalid_argument);
    EXPECT_THROW(commutes(PauliString(2), PauliString(3)), std::invalid_argument);
    EXPECT_THROW(PauliString::parse(2, "X3"), std::invalid_argument);
    EXPECT_THROW(PauliString::parse(2, "X1 Z1"), std::invalid_argument);
    EXPECT_THROW(PauliString::parse(2, "Q1"), std::invalid_argument);
    EXPECT_THROW(PauliString::from_dense("XQ"), std::invalid_argument);
}

}  // namespace
}  // namespace cohqec
