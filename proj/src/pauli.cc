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

#include <bit>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cohqec {

namespace {

std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_size(std::size_t n) {
    if (n == 0 || n > kMaxPauliQubits) {
        throw std::invalid_argument("PauliString: qubit count must be in [1, 64], got " + std::to_string(n));
    }
}

void check_same_size(const PauliString &a, const PauliString &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(a.n_qubits()) + " vs " + std::to_string(b.n_qubits()));
    }
}

int popcount(std::uint64_t v) { return std::popcount(v); }

// Strips an optional phase prefix ("+", "-", "i", "+i", "-i") and returns its exponent.
unsigned take_phase_prefix(std::string_view &text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    unsigned phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') {
            phase = 2;
        }
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase = (phase + 1) & 3;
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    return phase;
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits) : n_(n_qubits) { check_size(n_qubits); }

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_bits, std::uint64_t z_bits, unsigned phase)
    : n_(n_qubits), x_(x_bits), z_(z_bits), phase_(phase & 3) {
    check_size(n_qubits);
    if ((x_bits | z_bits) & ~low_mask(n_qubits)) {
        throw std::invalid_argument("PauliString: bits set beyond qubit count");
    }
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t q, char letter) {
    if (q >= n_qubits) {
        throw std::invalid_argument("PauliString::single: qubit index out of range");
    }
    return on_support(n_qubits, std::uint64_t{1} << q, letter);
}

PauliString PauliString::on_support(std::size_t n_qubits, std::uint64_t support_mask, char letter) {
    switch (letter) {
        case 'X':
            return PauliString(n_qubits, support_mask, 0);
        case 'Z':
            return PauliString(n_qubits, 0, support_mask);
        case 'Y':
            return PauliString(n_qubits, support_mask, support_mask);
        case 'I':
            return PauliString(n_qubits);
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
    }
}

PauliString PauliString::from_dense(std::string_view text) {
    unsigned phase = take_phase_prefix(text);
    std::uint64_t xs = 0;
    std::uint64_t zs = 0;
    std::size_t n = text.size();
    check_size(n);
    for (std::size_t q = 0; q < n; ++q) {
        char c = text[q];
        std::uint64_t bit = std::uint64_t{1} << q;
        switch (c) {
            case 'I':
            case '_':
                break;
            case 'X':
                xs |= bit;
                break;
            case 'Z':
                zs |= bit;
                break;
            case 'Y':
                xs |= bit;
                zs |= bit;
                break;
            default:
                throw std::invalid_argument(std::string("from_dense: unknown character '") + c + "'");
        }
    }
    return PauliString(n, xs, zs, phase);
}

PauliString PauliString::parse(std::size_t n_qubits, std::string_view text) {
    unsigned phase = take_phase_prefix(text);
    PauliString result(n_qubits);
    result.phase_ = phase;
    if (text == "I") {
        return result;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        char letter = text[pos++];
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (start == pos) {
            throw std::invalid_argument("PauliString::parse: missing qubit index after '" + std::string(1, letter) + "'");
        }
        std::size_t q = std::stoul(std::string(text.substr(start, pos - start)));
        if (q == 0 || q > n_qubits) {
            throw std::invalid_argument("PauliString::parse: qubit index out of range: " + std::to_string(q));
        }
        PauliString factor = single(n_qubits, q - 1, letter);
        if (factor.support() & result.support()) {
            throw std::invalid_argument("PauliString::parse: qubit " + std::to_string(q) + " listed twice");
        }
        result.x_ |= factor.x_;
        result.z_ |= factor.z_;
    }
    return result;
}

char PauliString::letter(std::size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

std::size_t PauliString::weight() const { return static_cast<std::size_t>(popcount(support())); }

PauliString &PauliString::operator*=(const PauliString &rhs) {
    check_same_size(*this, rhs);
    // Per-qubit exponent of i picked up by σ_a σ_b = i^g σ_{a⊕b}.
    std::uint64_t ya = x_ & z_;
    std::uint64_t xa = x_ & ~z_;
    std::uint64_t za = z_ & ~x_;
    std::uint64_t yb = rhs.x_ & rhs.z_;
    std::uint64_t xb = rhs.x_ & ~rhs.z_;
    std::uint64_t zb = rhs.z_ & ~rhs.x_;
    int g = 0;
    g += popcount(xa & yb) - popcount(xa & zb);
    g += popcount(ya & zb) - popcount(ya & xb);
    g += popcount(za & xb) - popcount(za & yb);
    phase_ = static_cast<unsigned>((static_cast<int>(phase_) + static_cast<int>(rhs.phase_) + g) & 3);
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString result = *this;
    result *= rhs;
    return result;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[4] = {"", "i ", "-", "-i "};
    std::string out = kPrefix[phase_];
    if (support() == 0) {
        return out + "I";
    }
    bool first = true;
    for (std::size_t q = 0; q < n_; ++q) {
        char c = letter(q);
        if (c == 'I') {
            continue;
        }
        if (!first) {
            out += ' ';
        }
        first = false;
        out += c;
        out += std::to_string(q + 1);
    }
    return out;
}

std::string PauliString::dense_str() const {
    static constexpr const char *kPrefix[4] = {"+", "i", "-", "-i"};
    std::string out = kPrefix[phase_];
    for (std::size_t q = 0; q < n_; ++q) {
        out += letter(q);
    }
    return out;
}

PauliString pauli_mul(const PauliString &a, const PauliString &b) { return a * b; }

bool commutes(const PauliString &a, const PauliString &b) {
    check_same_size(a, b);
    return ((popcount(a.x_bits() & b.z_bits()) + popcount(a.z_bits() & b.x_bits())) & 1) == 0;
}

std::ostream &operator<<(std::ostream &out, const PauliString &p) { return out << p.str(); }

}  // namespace cohqec
