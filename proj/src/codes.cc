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

#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "cohqec/subsets.h"

namespace cohqec {

SyndromeRecord SyndromeRecord::operator^(const SyndromeRecord &other) const {
    if (length != other.length) {
        throw std::invalid_argument("SyndromeRecord length mismatch");
    }
    return {bits ^ other.bits, length};
}

std::string SyndromeRecord::str() const {
    std::string out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out += bit(i) ? '1' : '0';
    }
    return out;
}

std::vector<std::size_t> StabilizerCode::stabilizers_detecting(Axis error_axis) const {
    // Z-type checks see X errors and vice versa.
    Axis wanted = other_axis(error_axis);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < stabilizer_types.size(); ++i) {
        if (stabilizer_types[i] == wanted) {
            out.push_back(i);
        }
    }
    return out;
}

StabilizerCode repetition_code(std::size_t d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("repetition code distance must be odd and >= 3, got " + std::to_string(d));
    }
    if (d > kMaxPauliQubits) {
        throw std::invalid_argument("repetition code distance too large");
    }
    StabilizerCode code;
    code.name = "rep:" + std::to_string(d);
    code.n_qubits = d;
    code.distance = d;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        code.stabilizers.push_back(PauliString::on_support(d, (std::uint64_t{3} << i), 'Z'));
        code.stabilizer_types.push_back(Axis::Z);
    }
    std::uint64_t all = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    code.logical_x = PauliString::on_support(d, all, 'X');
    code.logical_z = PauliString::single(d, 0, 'Z');
    return code;
}

StabilizerCode rotated_surface_code(std::size_t d, bool allow_large) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("surface code distance must be odd and >= 3, got " + std::to_string(d));
    }
    if (d > 3 && !allow_large) {
        throw std::invalid_argument("surface code distance " + std::to_string(d) +
                                    " needs the large-memory option; only d=3 is enabled by default");
    }
    if (d * d > kMaxPauliQubits) {
        throw std::invalid_argument("surface code distance too large");
    }
    const std::size_t n = d * d;
    const long dd = static_cast<long>(d);
    auto qubit = [d](long r, long c) { return std::uint64_t{1} << (static_cast<std::size_t>(r) * d + static_cast<std::size_t>(c)); };

    std::vector<PauliString> z_checks;
    std::vector<PauliString> x_checks;
    // Faces (i, j) for i, j in [-1, d-1]; face covers rows i..i+1 and columns j..j+1 clipped to the grid.
    for (long i = -1; i < dd; ++i) {
        for (long j = -1; j < dd; ++j) {
            bool row_edge = (i == -1 || i == dd - 1);
            bool col_edge = (j == -1 || j == dd - 1);
            if (row_edge && col_edge) {
                continue;
            }
            bool x_type = ((i + j) % 2 + 2) % 2 == 0;
            // Boundary half-faces: X checks only on top/bottom, Z checks only on left/right.
            if (row_edge && !x_type) {
                continue;
            }
            if (col_edge && x_type) {
                continue;
            }
            std::uint64_t mask = 0;
            for (long r = i; r <= i + 1; ++r) {
                for (long c = j; c <= j + 1; ++c) {
                    if (r >= 0 && r < dd && c >= 0 && c < dd) {
                        mask |= qubit(r, c);
                    }
                }
            }
            if (x_type) {
                x_checks.push_back(PauliString::on_support(n, mask, 'X'));
            } else {
                z_checks.push_back(PauliString::on_support(n, mask, 'Z'));
            }
        }
    }

    StabilizerCode code;
    code.name = "surface:" + std::to_string(d);
    code.n_qubits = n;
    code.distance = d;
    for (auto &s : z_checks) {
        code.stabilizers.push_back(s);
        code.stabilizer_types.push_back(Axis::Z);
    }
    for (auto &s : x_checks) {
        code.stabilizers.push_back(s);
        code.stabilizer_types.push_back(Axis::X);
    }
    std::uint64_t column0 = 0;
    std::uint64_t row0 = 0;
    for (long k = 0; k < dd; ++k) {
        column0 |= qubit(k, 0);
        row0 |= qubit(0, k);
    }
    code.logical_x = PauliString::on_support(n, column0, 'X');
    code.logical_z = PauliString::on_support(n, row0, 'Z');
    return code;
}

StabilizerCode parse_code(std::string_view token, bool allow_large) {
    auto colon = token.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("code token must look like rep:<d> or surface:<d>, got '" + std::string(token) + "'");
    }
    std::string_view family = token.substr(0, colon);
    std::string_view digits = token.substr(colon + 1);
    std::size_t d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("bad distance in code token '" + std::string(token) + "'");
    }
    if (family == "rep") {
        return repetition_code(d);
    }
    if (family == "surface") {
        return rotated_surface_code(d, allow_large);
    }
    throw std::invalid_argument("unknown code family '" + std::string(family) + "'");
}

SyndromeRecord syndrome_of(const StabilizerCode &code, const PauliString &error) {
    SyndromeRecord s;
    s.length = code.num_stabilizers();
    for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
        if (!commutes(code.stabilizers[i], error)) {
            s.bits |= std::uint64_t{1} << i;
        }
    }
    return s;
}

namespace {

bool is_nontrivial_logical(const StabilizerCode &code, const PauliString &p) {
    for (const auto &s : code.stabilizers) {
        if (!commutes(s, p)) {
            return false;
        }
    }
    return !commutes(p, code.logical_x) || !commutes(p, code.logical_z);
}

}  // namespace

std::size_t min_logical_weight(const StabilizerCode &code, std::size_t max_weight) {
    const std::size_t n = code.n_qubits;
    for (std::size_t w = 1; w <= max_weight && w <= n; ++w) {
        bool found = false;
        for_each_subset_lex(n, w, [&](std::uint64_t support) {
            // Every letter assignment on the support: 3^w choices.
            std::vector<std::size_t> qubits;
            for (std::size_t q = 0; q < n; ++q) {
                if ((support >> q) & 1) {
                    qubits.push_back(q);
                }
            }
            std::size_t combos = 1;
            for (std::size_t i = 0; i < w; ++i) {
                combos *= 3;
            }
            for (std::size_t c = 0; c < combos && !found; ++c) {
                std::uint64_t xs = 0;
                std::uint64_t zs = 0;
                std::size_t code_word = c;
                for (std::size_t q : qubits) {
                    std::size_t letter = code_word % 3;
                    code_word /= 3;
                    std::uint64_t bit = std::uint64_t{1} << q;
                    if (letter != 1) {
                        xs |= bit;  // X or Y
                    }
                    if (letter != 0) {
                        zs |= bit;  // Z or Y
                    }
                }
                found = is_nontrivial_logical(code, PauliString(n, xs, zs));
            }
            return !found;
        });
        if (found) {
            return w;
        }
    }
    return 0;
}

StateVector logical_basis_state(const StabilizerCode &code, LogicalBasis which, std::size_t max_qubits) {
    StateVector state(code.n_qubits, max_qubits);
    if (which == LogicalBasis::plus) {
        std::vector<Amplitude> amps(state.dim(), Amplitude{1.0, 0.0});
        state = StateVector::from_amplitudes(std::move(amps), max_qubits);
    }
    for (const auto &s : code.stabilizers) {
        state.project(s, +1);
    }
    return state;
}

std::vector<PauliString> destabilizers(const StabilizerCode &code) {
    const std::size_t n = code.n_qubits;
    std::vector<PauliString> out;
    for (std::size_t i = 0; i < code.num_stabilizers(); ++i) {
        // Z-type checks are flipped by X errors and vice versa.
        Axis letter_axis = other_axis(code.stabilizer_types[i]);
        char letter = axis_letter(letter_axis);
        std::uint64_t target = std::uint64_t{1} << i;
        std::optional<PauliString> found;
        for (std::size_t w = 1; w <= n && !found; ++w) {
            for_each_subset_lex(n, w, [&](std::uint64_t mask) {
                PauliString p = PauliString::on_support(n, mask, letter);
                if (syndrome_of(code, p).bits == target) {
                    found = p;
                    return false;
                }
                return true;
            });
        }
        if (!found) {
            throw std::logic_error("no destabilizer for stabilizer " + std::to_string(i));
        }
        // Fold away any logical component so the frame never touches the encoded information.
        const PauliString &partner = code.logical(other_axis(letter_axis));
        if (!commutes(*found, partner)) {
            *found *= code.logical(letter_axis);
        }
        out.push_back(found->with_phase(0));
    }
    return out;
}

PauliString frame_for_syndrome(const StabilizerCode &code, const std::vector<PauliString> &destabs,
                               const SyndromeRecord &syndrome) {
    if (syndrome.length != code.num_stabilizers() || destabs.size() != code.num_stabilizers()) {
        throw std::invalid_argument("frame_for_syndrome: syndrome length mismatch");
    }
    PauliString frame = PauliString::identity(code.n_qubits);
    for (std::size_t i = 0; i < destabs.size(); ++i) {
        if (syndrome.bit(i)) {
            frame *= destabs[i];
        }
    }
    return frame.with_phase(0);
}

RandomCodespace random_codespace_init(const StabilizerCode &code, LogicalBasis which, Rng &rng, std::size_t max_qubits) {
    std::uint64_t word = rng.next_u64();
    std::size_t m = code.num_stabilizers();
    SyndromeRecord syndrome{m >= 64 ? word : (word & ((std::uint64_t{1} << m) - 1)), m};
    PauliString frame = frame_for_syndrome(code, destabilizers(code), syndrome);
    StateVector state = logical_basis_state(code, which, max_qubits);
    state.apply_pauli(frame);
    return {std::move(state), syndrome, frame};
}

RandomCodespace random_codespace_init_product(const StabilizerCode &code, LogicalBasis which, Rng &rng,
                                              std::size_t max_qubits) {
    const std::size_t n = code.n_qubits;
    std::uint64_t word = rng.next_u64();
    std::uint64_t flips = n >= 64 ? word : (word & ((std::uint64_t{1} << n) - 1));
    StateVector state(n, max_qubits);
    if (which == LogicalBasis::plus) {
        std::vector<Amplitude> amps(state.dim(), Amplitude{1.0, 0.0});
        state = StateVector::from_amplitudes(std::move(amps), max_qubits);
        state.apply_pauli(PauliString::on_support(n, flips, 'Z'));
    } else {
        state.apply_pauli(PauliString::on_support(n, flips, 'X'));
    }
    SyndromeRecord syndrome{0, code.num_stabilizers()};
    for (std::size_t i = 0; i < code.num_stabilizers(); ++i) {
        if (state.measure_stabilizer(code.stabilizers[i], rng).outcome < 0) {
            syndrome.bits |= std::uint64_t{1} << i;
        }
    }
    PauliString frame = frame_for_syndrome(code, destabilizers(code), syndrome);
    // The frame commutes with both logicals, so the logical eigenvalue can be read off directly.
    const PauliString &observable = which == LogicalBasis::zero ? code.logical_z : code.logical_x;
    if (state.expectation(observable).real() < 0) {
        frame *= which == LogicalBasis::zero ? code.logical_x : code.logical_z;
        frame = frame.with_phase(0);
    }
    return {std::move(state), syndrome, frame};
}

}  // namespace cohqec
