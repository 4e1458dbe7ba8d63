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

#include "cohqec/analytic.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace cohqec {

std::uint64_t double_factorial(int m) {
    if (m < -1) {
        throw std::invalid_argument("double_factorial: m must be >= -1");
    }
    std::uint64_t r = 1;
    for (int k = m; k > 1; k -= 2) {
        r *= static_cast<std::uint64_t>(k);
    }
    return r;
}

void PredictionInput::validate() const {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("prediction: d must be odd and >= 3");
    }
    if (a_d < 0 || b_d < 0) {
        throw std::invalid_argument("prediction: a_d and b_d must be non-negative");
    }
    if (p && !(*p >= 0 && *p <= 1)) {
        throw std::invalid_argument("prediction: p must be in [0, 1]");
    }
    dist.validate();
}

double failure_polynomial(double linear, double quadratic, std::size_t n) {
    double nn = static_cast<double>(n);
    return linear * nn + quadratic * (nn * nn - nn);
}

double PredictedCurve::at(std::size_t n) const {
    if (n == 0) {
        return 0.0;
    }
    if (n > values.size()) {
        throw std::out_of_range("PredictedCurve::at: n beyond tabulated range");
    }
    return values[n - 1];
}

namespace {

double second_moment(const AngleDistribution &dist) { return dist.mean * dist.mean + dist.std * dist.std; }

double orthogonal_factor(const PredictionInput &in) {
    if (!in.p || *in.p <= 0) {
        throw std::invalid_argument("passive prediction needs orthogonal noise p > 0 (with p = 0 the walk never reverses)");
    }
    return (2.0 - 2.0 * *in.p) / *in.p;
}

double centered_normal_sigma(const PredictionInput &in, std::vector<std::string> &warnings) {
    if (in.dist.kind != AngleDistribution::Kind::normal || in.dist.mean != 0.0 || in.dist.cutoff) {
        warnings.push_back("normal-form predictor applied to a distribution that is not a centered normal; using its std");
    }
    return in.dist.std;
}

// Tabulates the curve, clips to [0, 1], and flags the perturbative validity window.
// The per-cycle scale of E|α| is taken as max(A, sqrt(B)): A tracks E|α|² (the same order as E|α|
// for local noise) and sqrt(B) tracks |E[α]|.
PredictedCurve finish(std::string model, const PredictionInput &in, double linear, double quadratic,
                      std::vector<std::string> warnings = {}) {
    in.validate();
    PredictedCurve curve;
    curve.model = std::move(model);
    curve.linear = linear;
    curve.quadratic = quadratic;
    curve.warnings = std::move(warnings);
    curve.values.reserve(in.n_cycles);
    bool clipped = false;
    for (std::size_t n = 1; n <= in.n_cycles; ++n) {
        double v = failure_polynomial(linear, quadratic, n);
        if (v > 1.0 || v < 0.0) {
            clipped = true;
            v = std::clamp(v, 0.0, 1.0);
        }
        curve.values.push_back(v);
    }
    if (clipped) {
        curve.warnings.push_back("prediction left [0, 1] and was clipped; outside the perturbative regime");
    }
    double alpha_scale = std::max(linear, std::sqrt(std::max(quadratic, 0.0)));
    double window = static_cast<double>(in.n_cycles) * alpha_scale;
    if (window > 0.1) {
        curve.warnings.push_back("n·E|α| ≈ " + std::to_string(window) +
                                 " exceeds 0.1; the lowest-order expansion is unreliable here");
    }
    return curve;
}

double half_power(double base, int d) { return std::pow(base, (d + 1) / 2.0); }

}  // namespace

PredictedCurve predict_active_ln(const PredictionInput &in) {
    double s2 = second_moment(in.dist);
    return finish("active-ln", in, in.a_d * half_power(s2, in.d), in.b_d * std::pow(in.dist.mean, 2 * in.d));
}

PredictedCurve predict_active_gn(const PredictionInput &in) {
    double lin = in.a_d * distribution_moment(in.dist, in.d + 1);
    double m = distribution_moment(in.dist, in.d);
    return finish("active-gn", in, lin, in.b_d * m * m);
}

PredictedCurve predict_discrete(const PredictionInput &in) {
    if (!in.p) {
        throw std::invalid_argument("discrete prediction needs p");
    }
    double p = *in.p;
    return finish("discrete", in, in.a_d * half_power(p, in.d), 0.0);
}

PredictedCurve predict_tc_ln(const PredictionInput &in) {
    double s2 = second_moment(in.dist);
    return finish("tc-ln", in, in.a_d * half_power(s2, in.d), in.b_d * std::pow(s2, in.d));
}

PredictedCurve predict_tc_gn(const PredictionInput &in) {
    return finish("tc-gn", in, in.a_d * distribution_moment(in.dist, in.d + 1),
                  in.b_d * distribution_moment(in.dist, 2 * in.d));
}

PredictedCurve predict_tc_gn_normal(const PredictionInput &in) {
    std::vector<std::string> warnings;
    double sigma = centered_normal_sigma(in, warnings);
    double lin = static_cast<double>(double_factorial(in.d)) * in.a_d * std::pow(sigma, in.d + 1);
    double quad = static_cast<double>(double_factorial(2 * in.d - 1)) * in.b_d * std::pow(sigma, 2 * in.d);
    return finish("tc-gn-normal", in, lin, quad, std::move(warnings));
}

PredictedCurve predict_passive_ln(const PredictionInput &in) {
    double s2 = second_moment(in.dist);
    double lin = in.a_d * half_power(s2, in.d) + orthogonal_factor(in) * in.b_d * std::pow(in.dist.mean, 2 * in.d);
    return finish("passive-ln", in, lin, 0.0);
}

PredictedCurve predict_passive_ln_reduced(const PredictionInput &in) {
    double s2 = second_moment(in.dist);
    double lin = in.a_d * half_power(s2, in.d) + in.b_d * std::pow(in.dist.mean, 2 * in.d - 2);
    return finish("passive-ln-reduced", in, lin, 0.0);
}

PredictedCurve predict_passive_gn(const PredictionInput &in) {
    double m = distribution_moment(in.dist, in.d);
    double lin = in.a_d * distribution_moment(in.dist, in.d + 1) + orthogonal_factor(in) * in.b_d * m * m;
    return finish("passive-gn", in, lin, 0.0);
}

PredictedCurve predict_passive_gn_normal(const PredictionInput &in) {
    std::vector<std::string> warnings;
    double sigma = centered_normal_sigma(in, warnings);
    double lin = static_cast<double>(double_factorial(in.d)) * in.a_d * std::pow(sigma, in.d + 1);
    return finish("passive-gn-normal", in, lin, 0.0, std::move(warnings));
}

PredictedCurve predict_passive_tc_ln(const PredictionInput &in) {
    double s2 = second_moment(in.dist);
    double lin = in.a_d * half_power(s2, in.d) + orthogonal_factor(in) * in.b_d * std::pow(s2, in.d);
    return finish("passive-tc-ln", in, lin, 0.0);
}

PredictedCurve predict_passive_tc_ln_reduced(const PredictionInput &in) {
    double s2 = second_moment(in.dist);
    double lin = in.a_d * half_power(s2, in.d) + in.b_d * std::pow(s2, in.d - 1);
    return finish("passive-tc-ln-reduced", in, lin, 0.0);
}

PredictedCurve predict_passive_tc_gn(const PredictionInput &in) {
    double lin = in.a_d * distribution_moment(in.dist, in.d + 1) +
                 orthogonal_factor(in) * in.b_d * distribution_moment(in.dist, 2 * in.d);
    return finish("passive-tc-gn", in, lin, 0.0);
}

PredictedCurve predict_passive_tc_gn_normal(const PredictionInput &in) {
    std::vector<std::string> warnings;
    double sigma = centered_normal_sigma(in, warnings);
    double lin = static_cast<double>(double_factorial(in.d)) * in.a_d * std::pow(sigma, in.d + 1) +
                 static_cast<double>(double_factorial(2 * in.d - 1)) * in.b_d * std::pow(sigma, 2 * in.d - 2);
    warnings.push_back("second term is the literal reduced form; its prefactor is only indicative");
    return finish("passive-tc-gn-normal", in, lin, 0.0, std::move(warnings));
}

namespace {

using Predictor = PredictedCurve (*)(const PredictionInput &);

const std::map<std::string, Predictor, std::less<>> &predictor_table() {
    static const std::map<std::string, Predictor, std::less<>> table{
        {"active-ln", predict_active_ln},
        {"active-gn", predict_active_gn},
        {"discrete", predict_discrete},
        {"tc-ln", predict_tc_ln},
        {"tc-gn", predict_tc_gn},
        {"tc-gn-normal", predict_tc_gn_normal},
        {"passive-ln", predict_passive_ln},
        {"passive-ln-reduced", predict_passive_ln_reduced},
        {"passive-gn", predict_passive_gn},
        {"passive-gn-normal", predict_passive_gn_normal},
        {"passive-tc-ln", predict_passive_tc_ln},
        {"passive-tc-ln-reduced", predict_passive_tc_ln_reduced},
        {"passive-tc-gn", predict_passive_tc_gn},
        {"passive-tc-gn-normal", predict_passive_tc_gn_normal},
    };
    return table;
}

}  // namespace

const std::vector<std::string> &prediction_models() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, fn] : predictor_table()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

PredictedCurve predict_by_name(std::string_view model, const PredictionInput &in) {
    auto it = predictor_table().find(model);
    if (it == predictor_table().end()) {
        throw std::invalid_argument("unknown prediction model '" + std::string(model) + "'");
    }
    return it->second(in);
}

double walk_prediction(double mean_abs_alpha_squared, double mean_abs_alpha, double p, std::size_t n) {
    if (!(p > 0 && p <= 1)) {
        throw std::invalid_argument("walk_prediction: p must be in (0, 1]");
    }
    return static_cast<double>(n) *
           (mean_abs_alpha_squared + (2.0 - 2.0 * p) / p * mean_abs_alpha * mean_abs_alpha);
}

AlphaSource AlphaSource::constant(Amplitude alpha) {
    AlphaSource s;
    s.values_ = {alpha};
    s.probs_ = {1.0};
    s.cdf_ = {1.0};
    return s;
}

AlphaSource AlphaSource::two_point(double mean, double second_moment) {
    double var = second_moment - mean * mean;
    if (var < -1e-15 * std::max(1.0, second_moment)) {
        throw std::invalid_argument("two_point: second moment below squared mean");
    }
    double spread = std::sqrt(std::max(var, 0.0));
    if (spread == 0.0) {
        return constant(mean);
    }
    AlphaSource s;
    s.values_ = {mean - spread, mean + spread};
    s.probs_ = {0.5, 0.5};
    s.cdf_ = {0.5, 1.0};
    return s;
}

AlphaSource AlphaSource::from_distribution(const AlphaDistribution &dist) {
    AlphaSource s;
    double total = 0.0;
    for (const auto &e : dist.entries) {
        if (e.alpha && e.probability > 0) {
            s.values_.push_back(*e.alpha);
            s.probs_.push_back(e.probability);
            total += e.probability;
        }
    }
    if (s.values_.empty()) {
        throw std::invalid_argument("from_distribution: no non-degenerate branches");
    }
    double acc = 0.0;
    for (double &p : s.probs_) {
        p /= total;
        acc += p;
        s.cdf_.push_back(acc);
    }
    s.cdf_.back() = 1.0;
    return s;
}

Amplitude AlphaSource::sample(Rng &rng) const {
    if (values_.size() == 1) {
        return values_[0];
    }
    double u = rng.uniform();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), values_.size() - 1);
    return values_[i];
}

double AlphaSource::mean_abs() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        acc += probs_[i] * std::abs(values_[i]);
    }
    return acc;
}

double AlphaSource::mean_abs_squared() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        acc += probs_[i] * std::norm(values_[i]);
    }
    return acc;
}

WalkEstimate walk_oracle(const AlphaSource &alpha, double p, std::size_t n_cycles, std::size_t trials,
                         std::uint64_t seed) {
    if (!(p > 0 && p <= 1)) {
        throw std::invalid_argument("walk_oracle: p must be in (0, 1]");
    }
    if (trials == 0) {
        throw std::invalid_argument("walk_oracle: trials must be >= 1");
    }
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_stream(seed, t, 0, StreamPurpose::walk);
        Amplitude total{};
        double sign = 1.0;
        std::size_t done = 0;
        while (done < n_cycles) {
            std::size_t run = static_cast<std::size_t>(std::min<std::uint64_t>(rng.geometric(p), n_cycles - done));
            Amplitude run_sum{};
            if (alpha.is_constant()) {
                run_sum = static_cast<double>(run) * alpha.value(0);
            } else {
                for (std::size_t j = 0; j < run; ++j) {
                    run_sum += alpha.sample(rng);
                }
            }
            total += sign * run_sum;
            sign = -sign;
            done += run;
        }
        double x = std::norm(total);
        double delta = x - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (x - mean);
    }
    WalkEstimate est;
    est.mean = mean;
    est.trials = trials;
    est.std_error = trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) / static_cast<double>(trials)) : 0.0;
    return est;
}

}  // namespace cohqec
