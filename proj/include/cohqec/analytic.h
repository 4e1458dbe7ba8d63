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

#ifndef COHQEC_ANALYTIC_H
#define COHQEC_ANALYTIC_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohqec/noise.h"
#include "cohqec/qec_engine.h"
#include "cohqec/statevec.h"

namespace cohqec {

/// m!! for m >= -1, with (-1)!! = 0!! = 1.
std::uint64_t double_factorial(int m);

/// Inputs shared by every predictor. Unused fields are ignored by a given model.
struct PredictionInput {
    int d = 3;
    double a_d = 0.0;
    double b_d = 0.0;
    /// Per-cycle (or, for time-correlated models, frozen) angle distribution.
    AngleDistribution dist;
    /// Probability of the orthogonal discrete noise (passive models) or of the flips (discrete model).
    std::optional<double> p;
    std::size_t n_cycles = 0;

    void validate() const;
};

/// P(n) = linear·n + quadratic·(n² - n), tabulated for n = 1..n_cycles and clipped to [0, 1].
struct PredictedCurve {
    std::string model;
    double linear = 0.0;
    double quadratic = 0.0;
    std::vector<double> values;
    std::vector<std::string> warnings;

    double at(std::size_t n) const;
};

/// Unclipped A·n + B·(n² - n).
double failure_polynomial(double linear, double quadratic, std::size_t n);

// Active correction.
PredictedCurve predict_active_ln(const PredictionInput &in);
PredictedCurve predict_active_gn(const PredictionInput &in);
PredictedCurve predict_discrete(const PredictionInput &in);
PredictedCurve predict_tc_ln(const PredictionInput &in);
PredictedCurve predict_tc_gn(const PredictionInput &in);
/// Centered-normal form of predict_tc_gn: d!!·a·σ^{d+1} and (2d-1)!!·b·σ^{2d}.
PredictedCurve predict_tc_gn_normal(const PredictionInput &in);

// Passive correction with orthogonal discrete noise of probability p > 0; all curves are linear.
PredictedCurve predict_passive_ln(const PredictionInput &in);
/// p ~ μ² form: a(μ²+σ²)^{(d+1)/2} + b·μ^{2d-2}.
PredictedCurve predict_passive_ln_reduced(const PredictionInput &in);
PredictedCurve predict_passive_gn(const PredictionInput &in);
/// Centered-normal form: d!!·a·σ^{d+1}.
PredictedCurve predict_passive_gn_normal(const PredictionInput &in);
PredictedCurve predict_passive_tc_ln(const PredictionInput &in);
/// p ~ μ²+σ² form: a·s^{(d+1)/2} + b·s^{d-1} with s = μ²+σ².
PredictedCurve predict_passive_tc_ln_reduced(const PredictionInput &in);
PredictedCurve predict_passive_tc_gn(const PredictionInput &in);
/// Centered-normal form, taken literally: d!!·a·σ^{d+1} + (2d-1)!!·b·σ^{2d-2}.
PredictedCurve predict_passive_tc_gn_normal(const PredictionInput &in);

/// Model names accepted by predict_by_name, e.g. "active-ln", "passive-tc-gn-normal".
const std::vector<std::string> &prediction_models();
PredictedCurve predict_by_name(std::string_view model, const PredictionInput &in);

/// n·(E|α|² + (2-2p)/p · E²|α|): the passive-correction random-walk prediction.
double walk_prediction(double mean_abs_alpha_squared, double mean_abs_alpha, double p, std::size_t n);

/// Discrete law of the per-cycle step α.
class AlphaSource {
   public:
    static AlphaSource constant(Amplitude alpha);
    /// α = mean ± sqrt(second_moment - mean²), each with probability 1/2.
    static AlphaSource two_point(double mean, double second_moment);
    /// Non-degenerate entries of an exact distribution, renormalized.
    static AlphaSource from_distribution(const AlphaDistribution &dist);

    Amplitude sample(Rng &rng) const;
    bool is_constant() const { return values_.size() == 1; }
    Amplitude value(std::size_t i) const { return values_[i]; }
    double mean_abs() const;
    double mean_abs_squared() const;

   private:
    std::vector<Amplitude> values_;
    std::vector<double> probs_;
    std::vector<double> cdf_;
};

struct WalkEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t trials = 0;
};

/// Monte Carlo of the sign-reversing walk: runs of geometric length R (E[R] = 1/p) accumulate
/// α steps, successive runs alternate in sign, and the estimate is E|Γ_n|² after n_cycles steps.
/// Trial t uses stream (seed, t, 0, walk).
WalkEstimate walk_oracle(const AlphaSource &alpha, double p, std::size_t n_cycles, std::size_t trials, std::uint64_t seed);

}  // namespace cohqec

#endif
