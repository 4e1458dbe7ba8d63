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

#include "cohqec/experiments.h"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "cohqec/curve_io.h"

namespace cohqec {

namespace {

constexpr std::size_t kTrialBlock = 256;

struct RunningStats {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    void merge(const RunningStats &other) {
        if (other.count == 0) {
            return;
        }
        double total = count + other.count;
        double delta = other.mean - mean;
        mean += delta * other.count / total;
        m2 += other.m2 + delta * delta * count * other.count / total;
        count = total;
    }
};

// Neumaier-compensated running sum.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + carry; }
};

Axis malignant_axis_for(const NoiseModel &model) {
    if (auto axis = model.hamiltonian_axis()) {
        return *axis;
    }
    for (const auto &c : model.components) {
        if (const auto *disc = std::get_if<DiscretePauli>(&c)) {
            return disc->axis;
        }
    }
    return Axis::X;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (n_cycles < 1) {
        throw std::invalid_argument("cycles must be >= 1");
    }
    parse_code(code, allow_large);
    parse_noise(noise);
    if (overlay_model) {
        const auto &models = prediction_models();
        if (std::find(models.begin(), models.end(), *overlay_model) == models.end()) {
            throw std::invalid_argument("unknown overlay model '" + *overlay_model + "'");
        }
    }
}

std::optional<std::string> FailureCurve::meta(std::string_view key) const {
    for (const auto &[k, v] : metadata) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

double FitResult::linear_error() const { return std::sqrt(std::max(covariance[0][0], 0.0)); }
double FitResult::quadratic_error() const { return std::sqrt(std::max(covariance[1][1], 0.0)); }

std::size_t resolve_workers(std::size_t requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv(kWorkersEnv)) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception &) {
        }
        throw std::invalid_argument(std::string(kWorkersEnv) + " must be a positive integer");
    }
    return 1;
}

MalignantCounts malignant_counts_for(const StabilizerCode &code, Axis axis) {
    return enumerate_malignant_sets(code, LookupDecoder(code, axis), axis);
}

FailureCurve run_experiment(const ExperimentConfig &config) {
    config.validate();
    auto started = std::chrono::steady_clock::now();
    StabilizerCode code = parse_code(config.code, config.allow_large);
    NoiseModel model = parse_noise(config.noise);
    TrajectoryConfig tcfg{config.strategy, config.init, config.reference, kDefaultMaxQubits};
    const TrajectoryRunner runner(code, model, tcfg);

    const std::size_t n = config.n_cycles;
    const std::size_t blocks = (config.trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<std::vector<RunningStats>> block_stats(blocks, std::vector<RunningStats>(n));
    std::atomic<std::size_t> next_block{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        std::vector<double> trajectory(n);
        while (true) {
            std::size_t b = next_block.fetch_add(1);
            if (b >= blocks) {
                return;
            }
            try {
                std::size_t first = b * kTrialBlock;
                std::size_t last = std::min(config.trials, first + kTrialBlock);
                auto &stats = block_stats[b];
                for (std::size_t t = first; t < last; ++t) {
                    runner.run(config.seed, t, trajectory);
                    for (std::size_t c = 0; c < n; ++c) {
                        stats[c].add(trajectory[c]);
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next_block.store(blocks);
                return;
            }
        }
    };

    const std::size_t workers = std::min(resolve_workers(config.workers), std::max<std::size_t>(blocks, 1));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    FailureCurve curve;
    curve.points.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        RunningStats total;
        CompensatedSum sum;
        for (std::size_t b = 0; b < blocks; ++b) {
            total.merge(block_stats[b][c]);
            sum.add(block_stats[b][c].mean * block_stats[b][c].count);
        }
        double count = total.count;
        double mean = std::clamp(sum.value() / count, 0.0, 1.0);
        double se = count > 1 ? std::sqrt(std::max(total.m2, 0.0) / (count - 1) / count) : 0.0;
        curve.points[c] = CurvePoint{c + 1, mean, se, config.trials};
    }

    Axis axis = malignant_axis_for(model);
    curve.metadata = {
        {"code", code.name},
        {"noise", model.str()},
        {"strategy", to_string(config.strategy)},
        {"init", to_string(config.init)},
        {"reference", to_string(config.reference)},
        {"cycles", std::to_string(config.n_cycles)},
        {"trials", std::to_string(config.trials)},
        {"seed", std::to_string(config.seed)},
    };
    if (code.n_qubits <= 25 && code.distance <= 7) {
        MalignantCounts counts = malignant_counts_for(code, axis);
        curve.metadata.emplace_back("malignant_axis", std::string(1, axis_letter(axis)));
        curve.metadata.emplace_back("a_d", std::to_string(counts.a_d));
        curve.metadata.emplace_back("b_d", std::to_string(counts.b_d));
    }
    curve.metadata.emplace_back("decoder", LookupDecoder::kTieBreakRule);
    curve.metadata.emplace_back("stderr", "across trials; cycles within a trajectory are correlated");
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    curve.metadata.emplace_back("wall_time_s", format_double(wall));
    return curve;
}

FitResult fit_failure_curve(const FailureCurve &curve, std::size_t min_cycle, std::size_t max_cycle) {
    std::vector<const CurvePoint *> rows;
    std::set<std::size_t> distinct;
    for (const auto &p : curve.points) {
        if (p.cycle >= min_cycle && p.cycle <= max_cycle) {
            rows.push_back(&p);
            distinct.insert(p.cycle);
        }
    }
    if (distinct.size() < 2) {
        throw std::invalid_argument("fit needs at least two distinct cycle counts");
    }
    double max_weight = 0.0;
    for (const auto *p : rows) {
        if (p->std_error > 0) {
            max_weight = std::max(max_weight, 1.0 / (p->std_error * p->std_error));
        }
    }
    const bool unit_weights = max_weight == 0.0;

    const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd design(m, 2);
    Eigen::VectorXd target(m);
    Eigen::VectorXd weight(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        double n = static_cast<double>(rows[static_cast<std::size_t>(i)]->cycle);
        double se = rows[static_cast<std::size_t>(i)]->std_error;
        design(i, 0) = n;
        design(i, 1) = n * n - n;
        target(i) = rows[static_cast<std::size_t>(i)]->mean_failure;
        weight(i) = unit_weights ? 1.0 : (se > 0 ? 1.0 / (se * se) : max_weight);
    }
    Eigen::VectorXd root_w = weight.cwiseSqrt();
    Eigen::MatrixXd weighted_design = root_w.asDiagonal() * design;
    Eigen::VectorXd weighted_target = root_w.asDiagonal() * target;
    auto qr = weighted_design.colPivHouseholderQr();
    if (qr.rank() < 2) {
        throw std::invalid_argument("fit design matrix is singular");
    }
    Eigen::Vector2d coef = qr.solve(weighted_target);
    Eigen::Matrix2d normal = weighted_design.transpose() * weighted_design;
    Eigen::Matrix2d cov = normal.inverse();

    Eigen::VectorXd residual = weighted_target - weighted_design * coef;
    double chi2 = residual.squaredNorm();
    double dof = static_cast<double>(m) - 2.0;
    FitResult fit;
    fit.linear = coef(0);
    fit.quadratic = coef(1);
    fit.points = rows.size();
    fit.reduced_chi_square = dof > 0 ? chi2 / dof : std::numeric_limits<double>::quiet_NaN();
    if (unit_weights && dof > 0) {
        cov *= fit.reduced_chi_square;
    }
    fit.covariance = {{{cov(0, 0), 0.5 * (cov(0, 1) + cov(1, 0))}, {0.5 * (cov(0, 1) + cov(1, 0)), cov(1, 1)}}};
    return fit;
}

FailureCurve curve_from_prediction(const PredictedCurve &prediction, const PredictionInput &input) {
    FailureCurve curve;
    curve.source = "predicted";
    for (std::size_t n = 1; n <= prediction.values.size(); ++n) {
        curve.points.push_back(CurvePoint{n, prediction.values[n - 1], 0.0, 0});
    }
    curve.metadata = {
        {"model", prediction.model},
        {"d", std::to_string(input.d)},
        {"a_d", format_double(input.a_d)},
        {"b_d", format_double(input.b_d)},
        {"dist", input.dist.str()},
        {"p", input.p ? format_double(*input.p) : "none"},
        {"linear", format_double(prediction.linear)},
        {"quadratic", format_double(prediction.quadratic)},
    };
    for (const auto &w : prediction.warnings) {
        curve.metadata.emplace_back("warning", w);
    }
    return curve;
}

PredictionInput prediction_input_for(const ExperimentConfig &config, std::string_view model) {
    StabilizerCode code = parse_code(config.code, config.allow_large);
    NoiseModel noise = parse_noise(config.noise);
    Axis axis = malignant_axis_for(noise);
    MalignantCounts counts = malignant_counts_for(code, axis);

    PredictionInput in;
    in.d = static_cast<int>(code.distance);
    in.a_d = static_cast<double>(counts.a_d);
    in.b_d = static_cast<double>(counts.b_d);
    in.n_cycles = config.n_cycles;
    const bool discrete_model = model == "discrete";
    for (const auto &c : noise.components) {
        if (const auto *ln = std::get_if<LocalHamiltonian>(&c)) {
            in.dist = ln->dist;
        } else if (const auto *gn = std::get_if<GlobalHamiltonian>(&c)) {
            in.dist = gn->dist;
        } else if (const auto *tc = std::get_if<TimeCorrelated>(&c)) {
            in.dist = tc->innovation;
        } else {
            const auto &disc = std::get<DiscretePauli>(c);
            bool wanted = discrete_model ? disc.axis == axis : disc.axis != axis;
            if (wanted) {
                in.p = disc.p;
            }
        }
    }
    return in;
}

}  // namespace cohqec
