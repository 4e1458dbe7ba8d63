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

#include "cohqec/qec_engine.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cohqec {

namespace {

constexpr double kDegenerateBranch = 1e-14;

bool all_zero(const std::vector<double> &v) {
    return std::all_of(v.begin(), v.end(), [](double a) { return a == 0.0; });
}

}  // namespace

std::string to_string(Strategy s) { return s == Strategy::active ? "active" : "passive"; }
std::string to_string(InitMode m) { return m == InitMode::zero ? "zero" : "random"; }
std::string to_string(LogicalBasis b) { return b == LogicalBasis::zero ? "zero" : "plus"; }

Strategy parse_strategy(std::string_view text) {
    if (text == "active") {
        return Strategy::active;
    }
    if (text == "passive") {
        return Strategy::passive;
    }
    throw std::invalid_argument("strategy must be active or passive, got '" + std::string(text) + "'");
}

InitMode parse_init_mode(std::string_view text) {
    if (text == "zero") {
        return InitMode::zero;
    }
    if (text == "random") {
        return InitMode::random;
    }
    throw std::invalid_argument("init mode must be zero or random, got '" + std::string(text) + "'");
}

LogicalBasis parse_logical_basis(std::string_view text) {
    if (text == "zero") {
        return LogicalBasis::zero;
    }
    if (text == "plus") {
        return LogicalBasis::plus;
    }
    throw std::invalid_argument("reference must be zero or plus, got '" + std::string(text) + "'");
}

PauliString Decoders::correction(const SyndromeRecord &relative) const {
    return (x.decode_full(relative) * z.decode_full(relative)).with_phase(0);
}

SyndromeRecord qec_cycle(StateVector &state, PauliFrame &frame, const StabilizerCode &code, const Decoders &decoders,
                         const NoiseSample &sample, Strategy strategy, Rng &rng) {
    const std::size_t n = code.n_qubits;
    if (state.n_qubits() != n || frame.frame.n_qubits() != n || sample.x_angles.size() != n ||
        sample.z_angles.size() != n) {
        throw std::invalid_argument("qec_cycle: inconsistent sizes");
    }
    if (sample.x_flips != 0) {
        state.apply_pauli(PauliString::on_support(n, sample.x_flips, 'X'));
    }
    if (sample.z_flips != 0) {
        state.apply_pauli(PauliString::on_support(n, sample.z_flips, 'Z'));
    }
    if (!all_zero(sample.x_angles)) {
        state.apply_axis_rotations(Axis::X, sample.x_angles);
    }
    if (!all_zero(sample.z_angles)) {
        state.apply_axis_rotations(Axis::Z, sample.z_angles);
    }

    SyndromeRecord physical{0, code.num_stabilizers()};
    for (std::size_t i = 0; i < code.num_stabilizers(); ++i) {
        if (state.measure_stabilizer(code.stabilizers[i], rng).outcome < 0) {
            physical.bits |= std::uint64_t{1} << i;
        }
    }
    SyndromeRecord relative = physical ^ frame.expected_syndrome;
    if (relative.is_zero()) {
        return physical;
    }
    PauliString correction = decoders.correction(relative);
    if (strategy == Strategy::active) {
        state.apply_pauli(correction);
    } else {
        frame.frame = (correction * frame.frame).with_phase(0);
        frame.expected_syndrome = physical;
    }
    return physical;
}

double logical_failure(const StateVector &state, const PauliFrame &frame, const StateVector &reference) {
    double f = std::norm(pauli_matrix_element(reference, frame.frame, state));
    return std::clamp(1.0 - f, 0.0, 1.0);
}

TrajectoryRunner::TrajectoryRunner(StabilizerCode code, NoiseModel model, TrajectoryConfig config)
    : code_(std::move(code)),
      model_(std::move(model)),
      config_(config),
      decoders_(code_),
      reference_(logical_basis_state(code_, config.reference, config.max_qubits)),
      destabilizers_(destabilizers(code_)) {
    model_.validate();
}

void TrajectoryRunner::run(std::uint64_t seed, std::uint64_t trial, std::span<double> out) const {
    StateVector state = reference_;
    PauliFrame frame = PauliFrame::identity(code_);
    if (config_.init == InitMode::random) {
        Rng init_rng = Rng::for_stream(seed, trial, 0, StreamPurpose::codespace_init);
        std::uint64_t word = init_rng.next_u64();
        std::size_t m = code_.num_stabilizers();
        SyndromeRecord syndrome{m >= 64 ? word : (word & ((std::uint64_t{1} << m) - 1)), m};
        frame.frame = frame_for_syndrome(code_, destabilizers_, syndrome);
        frame.expected_syndrome = syndrome;
        state.apply_pauli(frame.frame);
    }
    Rng process_rng = Rng::for_stream(seed, trial, 0, StreamPurpose::process_init);
    NoiseProcessState process = init_process(model_, code_.n_qubits, process_rng);
    for (std::size_t c = 1; c <= out.size(); ++c) {
        Rng noise_rng = Rng::for_stream(seed, trial, c, StreamPurpose::noise);
        NoiseSample sample = sample_cycle(model_, process, c, noise_rng);
        Rng measure_rng = Rng::for_stream(seed, trial, c, StreamPurpose::measurement);
        qec_cycle(state, frame, code_, decoders_, sample, config_.strategy, measure_rng);
        out[c - 1] = logical_failure(state, frame, reference_);
    }
}

std::vector<double> TrajectoryRunner::run(std::uint64_t seed, std::uint64_t trial, std::size_t n_cycles) const {
    if (n_cycles == 0) {
        throw std::invalid_argument("n_cycles must be >= 1");
    }
    std::vector<double> out(n_cycles);
    run(seed, trial, out);
    return out;
}

std::vector<double> run_trajectory(const StabilizerCode &code, const NoiseModel &model, Strategy strategy, InitMode init,
                                   LogicalBasis reference, std::size_t n_cycles, std::uint64_t seed, std::uint64_t trial) {
    TrajectoryRunner runner(code, model, TrajectoryConfig{strategy, init, reference});
    return runner.run(seed, trial, n_cycles);
}

double AlphaDistribution::total_probability() const {
    double acc = 0.0;
    for (const auto &e : entries) {
        acc += e.probability;
    }
    return acc;
}

double AlphaDistribution::mean_abs_alpha_squared() const {
    double acc = 0.0;
    for (const auto &e : entries) {
        if (e.alpha) {
            acc += e.probability * std::norm(*e.alpha);
        }
    }
    return acc;
}

Amplitude AlphaDistribution::mean_alpha() const {
    Amplitude acc{};
    for (const auto &e : entries) {
        if (e.alpha) {
            acc += e.probability * *e.alpha;
        }
    }
    return acc;
}

AlphaDistribution exact_alpha_distribution(const StabilizerCode &code, Axis axis, std::span<const double> angles) {
    if (code.n_qubits > 13) {
        throw std::length_error("exact_alpha_distribution is limited to 13 qubits");
    }
    const LogicalBasis basis = axis == Axis::X ? LogicalBasis::zero : LogicalBasis::plus;
    const StateVector reference = logical_basis_state(code, basis);
    const PauliString &flip = code.logical(axis);
    const Decoders decoders(code);

    StateVector rotated = reference;
    rotated.apply_axis_rotations(axis, angles);

    AlphaDistribution dist;
    const std::size_t m = code.num_stabilizers();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        SyndromeRecord syndrome{bits, m};
        StateVector branch = rotated;
        double probability = 1.0;
        bool degenerate = false;
        for (std::size_t i = 0; i < m && !degenerate; ++i) {
            int outcome = syndrome.bit(i) ? -1 : +1;
            double conditional = branch.outcome_probability(code.stabilizers[i], outcome);
            probability *= conditional;
            if (probability < kDegenerateBranch) {
                degenerate = true;
                break;
            }
            branch.project(code.stabilizers[i], outcome);
        }
        // For degenerate branches the recorded probability is the partial product, an upper bound.
        AlphaEntry entry{syndrome, probability, std::nullopt};
        if (degenerate) {
            dist.entries.push_back(entry);
            continue;
        }
        branch.apply_pauli(decoders.correction(syndrome));
        Amplitude a0 = reference.inner(branch);
        Amplitude a1 = pauli_matrix_element(reference, flip, branch);
        if (std::abs(a0) > 0) {
            entry.alpha = a1 / a0;
        }
        dist.entries.push_back(entry);
    }
    return dist;
}

}  // namespace cohqec
