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

#include <gtest/gtest.h>

#include <cmath>

namespace cohqec {
namespace {

NoiseSample empty_sample(std::size_t n) {
    NoiseSample s;
    s.x_angles.assign(n, 0.0);
    s.z_angles.assign(n, 0.0);
    return s;
}

TEST(QecEngineTest, ZeroNoiseLeavesEverythingAlone) {
    StabilizerCode code = rotated_surface_code(3);
    Decoders dec(code);
    StateVector ref = logical_basis_state(code, LogicalBasis::zero);
    for (Strategy strategy : {Strategy::active, Strategy::passive}) {
        StateVector state = ref;
        PauliFrame frame = PauliFrame::identity(code);
        Rng rng(1);
        SyndromeRecord syn = qec_cycle(state, frame, code, dec, empty_sample(9), strategy, rng);
        EXPECT_TRUE(syn.is_zero());
        EXPECT_EQ(frame.frame, PauliString::identity(9));
        EXPECT_NEAR(fidelity(state, ref), 1.0, 1e-14);
    }
}

TEST(QecEngineTest, SingleFlipCorrectedDoubleFlipFails) {
    StabilizerCode code = repetition_code(3);
    Decoders dec(code);
    StateVector ref = logical_basis_state(code, LogicalBasis::zero);
    for (Strategy strategy : {Strategy::active, Strategy::passive}) {
        StateVector state = ref;
        PauliFrame frame = PauliFrame::identity(code);
        NoiseSample s = empty_sample(3);
        s.x_flips = 0b010;
        Rng rng(2);
        qec_cycle(state, frame, code, dec, s, strategy, rng);
        EXPECT_NEAR(logical_failure(state, frame, ref), 0.0, 1e-14);

        state = ref;
        frame = PauliFrame::identity(code);
        s.x_flips = 0b011;
        SyndromeRecord syn = qec_cycle(state, frame, code, dec, s, strategy, rng);
        EXPECT_EQ(syn.bits, 0b10u);
        EXPECT_NEAR(logical_failure(state, frame, ref), 1.0, 1e-14);
        if (strategy == Strategy::active) {
            StateVector flipped = ref;
            flipped.apply_pauli(code.logical_x);
            EXPECT_NEAR(fidelity(state, flipped), 1.0, 1e-14);
        }
    }
}

TEST(QecEngineTest, FailureInFrame) {
    StabilizerCode code = repetition_code(3);
    StateVector ref = logical_basis_state(code, LogicalBasis::zero);
    PauliFrame frame = PauliFrame::identity(code);
    frame.frame = PauliString::parse(3, "X2");
    frame.expected_syndrome = syndrome_of(code, frame.frame);
    StateVector state = ref;
    state.apply_pauli(frame.frame);
    EXPECT_NEAR(logical_failure(state, frame, ref), 0.0, 1e-15);
}

// Exhaustive oracle: every flip pattern, weighted by its probability, gives 3p^2 - 2p^3.
TEST(QecEngineTest, DiscreteFailureMatchesEnumeration) {
    StabilizerCode code = repetition_code(3);
    Decoders dec(code);
    StateVector ref = logical_basis_state(code, LogicalBasis::zero);
    const double p = 0.01;
    double total = 0;
    for (std::uint64_t flips = 0; flips < 8; ++flips) {
        StateVector state = ref;
        PauliFrame frame = PauliFrame::identity(code);
        NoiseSample s = empty_sample(3);
        s.x_flips = flips;
        Rng rng(3);
        qec_cycle(state, frame, code, dec, s, Strategy::active, rng);
        int k = std::popcount(flips);
        total += std::pow(p, k) * std::pow(1 - p, 3 - k) * logical_failure(state, frame, ref);
    }
    EXPECT_NEAR(total, 3 * p * p - 2 * p * p * p, 1e-17);
    EXPECT_NEAR(total, 2.98e-4, 1e-17);
}

TEST(QecEngineTest, FrameTracksExpectedSyndrome) {
    StabilizerCode code = rotated_surface_code(3);
    Decoders dec(code);
    NoiseModel model = parse_noise("ln:x:normal:0:0.2+disc:z:p=0.05");
    StateVector state = logical_basis_state(code, LogicalBasis::zero);
    PauliFrame frame = PauliFrame::identity(code);
    NoiseProcessState process;
    Rng init(4);
    process = init_process(model, 9, init);
    for (std::uint64_t c = 1; c <= 40; ++c) {
        Rng noise = Rng::for_stream(5, 0, c, StreamPurpose::noise);
        Rng meas = Rng::for_stream(5, 0, c, StreamPurpose::measurement);
        qec_cycle(state, frame, code, dec, sample_cycle(model, process, c, noise), Strategy::passive, meas);
        ASSERT_EQ(syndrome_of(code, frame.frame), frame.expected_syndrome);
        for (std::size_t i = 0; i < code.num_stabilizers(); ++i) {
            double eig = frame.expected_syndrome.bit(i) ? -1.0 : 1.0;
            ASSERT_NEAR(state.expectation(code.stabilizers[i]).real(), eig, 1e-10);
        }
    }
}

TEST(QecEngineTest, ActivePassiveAgreeOnDiscreteNoise) {
    NoiseModel model = parse_noise("disc:x:p=0.05+disc:z:p=0.05");
    for (const StabilizerCode &code : {repetition_code(5), rotated_surface_code(3)}) {
        TrajectoryRunner active(code, model, {Strategy::active, InitMode::zero, LogicalBasis::zero});
        TrajectoryRunner passive(code, model, {Strategy::passive, InitMode::zero, LogicalBasis::zero});
        for (std::uint64_t t = 0; t < 20; ++t) {
            auto a = active.run(9, t, 30);
            auto b = passive.run(9, t, 30);
            for (std::size_t c = 0; c < a.size(); ++c) {
                ASSERT_NEAR(a[c], b[c], 1e-12) << code.name << " trial " << t << " cycle " << c + 1;
            }
        }
    }
}

TEST(QecEngineTest, TrajectoriesAreDeterministic) {
    NoiseModel model = parse_noise("tc:x:local:beta=0.7:normal:0.02:0.1+disc:z:p=0.01");
    StabilizerCode code = repetition_code(3);
    TrajectoryRunner runner(code, model, {Strategy::passive, InitMode::random, LogicalBasis::zero});
    auto a = runner.run(11, 4, 25);
    auto b = run_trajectory(code, model, Strategy::passive, InitMode::random, LogicalBasis::zero, 25, 11, 4);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, runner.run(11, 5, 25));
    EXPECT_THROW(runner.run(11, 4, 0), std::invalid_argument);
}

TEST(QecEngineTest, NoNoiseNoFailureWithRandomInit) {
    for (Strategy s : {Strategy::active, Strategy::passive}) {
        for (LogicalBasis ref : {LogicalBasis::zero, LogicalBasis::plus}) {
            auto f = run_trajectory(rotated_surface_code(3), parse_noise("none"), s, InitMode::random, ref, 5, 1, 2);
            for (double v : f) {
                EXPECT_NEAR(v, 0.0, 1e-12);
            }
        }
    }
}

TEST(QecEngineTest, ExactAlphaRepetitionClosedForm) {
    const double eps = 0.05;
    StabilizerCode code = repetition_code(3);
    AlphaDistribution dist = exact_alpha_distribution(code, Axis::X, std::vector<double>(3, eps));
    ASSERT_EQ(dist.entries.size(), 4u);
    const double c = std::cos(eps), s = std::sin(eps);
    for (const auto &e : dist.entries) {
        ASSERT_TRUE(e.alpha.has_value());
        if (e.syndrome.is_zero()) {
            EXPECT_NEAR(e.probability, std::pow(c, 6) + std::pow(s, 6), 1e-15);
            EXPECT_NEAR(std::abs(*e.alpha), std::pow(std::tan(eps), 3), 1e-16);
        } else {
            EXPECT_NEAR(e.probability, c * c * s * s, 1e-15);
            EXPECT_NEAR(std::abs(*e.alpha), std::tan(eps), 1e-15);
        }
    }
    EXPECT_NEAR(std::abs(dist.entries[0].alpha->real()), 0.0, 1e-18);
    EXPECT_NEAR(dist.total_probability(), 1.0, 1e-12);
    double exact_second = (std::pow(c, 6) + std::pow(s, 6)) * std::pow(std::tan(eps), 6) + 3 * std::pow(s, 4);
    EXPECT_NEAR(dist.mean_abs_alpha_squared(), exact_second, 1e-17);
    EXPECT_NEAR(dist.mean_abs_alpha_squared() / (3 * std::pow(eps, 4)), 1.0, 3 * eps * eps);
}

TEST(QecEngineTest, ExactAlphaDegenerateAndSurface) {
    AlphaDistribution none = exact_alpha_distribution(repetition_code(3), Axis::X, std::vector<double>(3, 0.0));
    EXPECT_NEAR(none.total_probability(), 1.0, 1e-12);
    for (const auto &e : none.entries) {
        EXPECT_EQ(e.alpha.has_value(), e.syndrome.is_zero());
    }
    Rng rng(13);
    std::vector<double> angles(9);
    for (auto &a : angles) {
        a = 0.1 * rng.normal();
    }
    for (Axis axis : {Axis::X, Axis::Z}) {
        AlphaDistribution d = exact_alpha_distribution(rotated_surface_code(3), axis, angles);
        EXPECT_NEAR(d.total_probability(), 1.0, 1e-10);
        EXPECT_EQ(d.entries.size(), 256u);
    }
    EXPECT_THROW(exact_alpha_distribution(rotated_surface_code(5, true), Axis::X, std::vector<double>(25, 0.1)),
                 std::length_error);
}

TEST(QecEngineTest, ParseEnums) {
    EXPECT_EQ(parse_strategy("passive"), Strategy::passive);
    EXPECT_EQ(parse_init_mode("random"), InitMode::random);
    EXPECT_EQ(parse_logical_basis("plus"), LogicalBasis::plus);
    EXPECT_EQ(to_string(Strategy::active), "active");
    EXPECT_THROW(parse_strategy("lazy"), std::invalid_argument);
    EXPECT_THROW(parse_init_mode("one"), std::invalid_argument);
    EXPECT_THROW(parse_logical_basis("minus"), std::invalid_argument);
}

}  // namespace
}  // namespace cohqec
