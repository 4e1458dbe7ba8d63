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

#ifndef COHQEC_EXPERIMENTS_H
#define COHQEC_EXPERIMENTS_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohqec/analytic.h"
#include "cohqec/codes.h"
#include "cohqec/decoder.h"
#include "cohqec/noise.h"
#include "cohqec/qec_engine.h"

namespace cohqec {

/// Environment variable holding the default worker-thread count.
inline constexpr const char *kWorkersEnv = "COHQEC_WORKERS";

struct ExperimentConfig {
    std::string code = "rep:3";
    std::string noise = "none";
    Strategy strategy = Strategy::active;
    InitMode init = InitMode::zero;
    LogicalBasis reference = LogicalBasis::zero;
    std::size_t n_cycles = 1;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string output_path;
    /// Prediction model to tabulate alongside the simulation (see prediction_models()).
    std::optional<std::string> overlay_model;
    bool allow_large = false;
    /// 0 means: read kWorkersEnv, falling back to 1.
    std::size_t workers = 0;

    void validate() const;
};

struct CurvePoint {
    std::size_t cycle = 0;
    double mean_failure = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;

    bool operator==(const CurvePoint &) const = default;
};

/// Per-cycle mean logical failure with standard errors across trials.
struct FailureCurve {
    std::vector<CurvePoint> points;
    /// Ordered key/value pairs written as '#' header lines.
    std::vector<std::pair<std::string, std::string>> metadata;
    /// Empty for simulations; "predicted" for analytic curves (adds a source column).
    std::string source;

    std::optional<std::string> meta(std::string_view key) const;
    bool operator==(const FailureCurve &) const = default;
};

struct FitResult {
    double linear = 0.0;     // A
    double quadratic = 0.0;  // B
    std::array<std::array<double, 2>, 2> covariance{};
    /// NaN when there are no residual degrees of freedom.
    double reduced_chi_square = 0.0;
    std::size_t points = 0;

    double linear_error() const;
    double quadratic_error() const;
};

std::size_t resolve_workers(std::size_t requested);

/// (a_d, b_d) for a code along one axis, using the lookup decoder's tie-break.
MalignantCounts malignant_counts_for(const StabilizerCode &code, Axis axis);

/// Runs `trials` independent trajectories and aggregates them per cycle.
///
/// Trials are grouped into fixed blocks of consecutive indices; each block is reduced in trial
/// order and blocks are merged in block order, so the result is identical for any worker count.
FailureCurve run_experiment(const ExperimentConfig &config);

/// Weighted least squares of P(n) = A·n + B·(n² - n) with weights 1/stderr².
/// Rows with zero stderr get the largest weight present; if every stderr is zero, unit weights are
/// used and the covariance is scaled by the reduced chi-square. Restricts to cycles in
/// [min_cycle, max_cycle] when given. Needs at least two distinct cycles.
FitResult fit_failure_curve(const FailureCurve &curve, std::size_t min_cycle = 0,
                            std::size_t max_cycle = static_cast<std::size_t>(-1));

/// Wraps an analytic curve in the CSV curve type (std_error 0, trials 0, source "predicted").
FailureCurve curve_from_prediction(const PredictedCurve &prediction, const PredictionInput &input);

/// Builds predictor inputs from a simulation config: d from the code, (a_d, b_d) from enumeration,
/// the angle law from the first Hamiltonian component and p from the orthogonal discrete component
/// (or the same-axis one for the discrete model).
PredictionInput prediction_input_for(const ExperimentConfig &config, std::string_view model);

}  // namespace cohqec

#endif
