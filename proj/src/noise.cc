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

#include "cohqec/noise.h"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cohqec/log.h"

namespace cohqec {

namespace {

constexpr int kMaxRejections = 1000000;

double odd_double_factorial(int m) {
    double r = 1.0;
    for (int k = m; k > 1; k -= 2) {
        r *= k;
    }
    return r;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Moments of a uniform law on [lo, hi].
double uniform_interval_moment(double lo, double hi, int k) {
    if (hi == lo) {
        return std::pow(lo, k);
    }
    return (std::pow(hi, k + 1) - std::pow(lo, k + 1)) / ((k + 1) * (hi - lo));
}

double uniform_half_width(const AngleDistribution &d) { return std::sqrt(3.0) * d.std; }

double draw_uncut(const AngleDistribution &d, Rng &rng) {
    switch (d.kind) {
        case AngleDistribution::Kind::constant:
            return d.mean;
        case AngleDistribution::Kind::normal:
            return d.mean + d.std * rng.normal();
        case AngleDistribution::Kind::uniform:
            return d.mean + uniform_half_width(d) * (2.0 * rng.uniform() - 1.0);
    }
    return d.mean;
}

double parse_double(std::string_view text, std::string_view what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad number for " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

double parse_keyed(std::string_view field, std::string_view key) {
    std::string prefix = std::string(key) + "=";
    if (field.substr(0, prefix.size()) != prefix) {
        throw std::invalid_argument("expected '" + prefix + "...', got '" + std::string(field) + "'");
    }
    return parse_double(field.substr(prefix.size()), key);
}

Axis parse_axis(std::string_view field) {
    if (field == "x" || field == "X") {
        return Axis::X;
    }
    if (field == "z" || field == "Z") {
        return Axis::Z;
    }
    throw std::invalid_argument("axis must be x or z, got '" + std::string(field) + "'");
}

// Parses a <dist> starting at parts[pos].
AngleDistribution parse_dist(const std::vector<std::string_view> &parts, std::size_t pos) {
    if (pos >= parts.size()) {
        throw std::invalid_argument("missing distribution");
    }
    std::string_view kind = parts[pos];
    AngleDistribution d;
    std::size_t next = 0;
    if (kind == "const") {
        if (pos + 1 >= parts.size()) {
            throw std::invalid_argument("const needs a value");
        }
        d = AngleDistribution::constant(parse_double(parts[pos + 1], "const value"));
        next = pos + 2;
    } else if (kind == "normal" || kind == "uniform") {
        if (pos + 2 >= parts.size()) {
            throw std::invalid_argument(std::string(kind) + " needs mean and std");
        }
        double mean = parse_double(parts[pos + 1], "mean");
        double std = parse_double(parts[pos + 2], "std");
        d = kind == "normal" ? AngleDistribution::normal(mean, std) : AngleDistribution::uniform(mean, std);
        next = pos + 3;
    } else {
        throw std::invalid_argument("unknown distribution '" + std::string(kind) + "'");
    }
    if (next < parts.size()) {
        d.cutoff = parse_keyed(parts[next], "cut");
        ++next;
    }
    if (next != parts.size()) {
        throw std::invalid_argument("trailing fields after distribution");
    }
    d.validate();
    return d;
}

std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

char lower_axis(Axis a) { return a == Axis::X ? 'x' : 'z'; }

}  // namespace

void AngleDistribution::validate() const {
    if (!std::isfinite(mean) || !std::isfinite(std)) {
        throw std::invalid_argument("angle distribution parameters must be finite");
    }
    if (std < 0) {
        throw std::invalid_argument("angle distribution std must be >= 0");
    }
    if (cutoff) {
        if (!(*cutoff > 0) || !std::isfinite(*cutoff)) {
            throw std::invalid_argument("cutoff must be positive");
        }
        bool empty = false;
        if (kind == Kind::constant || std == 0) {
            empty = std::abs(mean) > *cutoff;
        } else if (kind == Kind::uniform) {
            double h = uniform_half_width(*this);
            empty = mean - h > *cutoff || mean + h < -*cutoff;
        }
        if (empty) {
            throw std::invalid_argument("cutoff excludes the whole distribution");
        }
    }
}

double AngleDistribution::sample(Rng &rng) const {
    if (!cutoff) {
        return draw_uncut(*this, rng);
    }
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        double v = draw_uncut(*this, rng);
        if (std::abs(v) <= *cutoff) {
            return v;
        }
    }
    throw std::runtime_error("cutoff rejection sampling did not terminate; cutoff too tight");
}

std::string AngleDistribution::str() const {
    std::string out;
    switch (kind) {
        case Kind::constant:
            out = "const:" + fmt_double(mean);
            break;
        case Kind::normal:
            out = "normal:" + fmt_double(mean) + ":" + fmt_double(std);
            break;
        case Kind::uniform:
            out = "uniform:" + fmt_double(mean) + ":" + fmt_double(std);
            break;
    }
    if (cutoff) {
        out += ":cut=" + fmt_double(*cutoff);
    }
    return out;
}

double distribution_moment(const AngleDistribution &dist, int k) {
    if (k < 0) {
        throw std::invalid_argument("moment order must be >= 0");
    }
    dist.validate();
    if (k == 0) {
        return 1.0;
    }
    const bool degenerate = dist.kind == AngleDistribution::Kind::constant || dist.std == 0;
    if (degenerate) {
        return std::pow(dist.mean, k);
    }
    if (dist.kind == AngleDistribution::Kind::uniform) {
        double h = uniform_half_width(dist);
        double lo = dist.mean - h;
        double hi = dist.mean + h;
        if (dist.cutoff) {
            lo = std::max(lo, -*dist.cutoff);
            hi = std::min(hi, *dist.cutoff);
        }
        return uniform_interval_moment(lo, hi, k);
    }
    if (!dist.cutoff) {
        // E[(μ + σZ)^k] with E[Z^j] = (j-1)!! for even j.
        double acc = 0.0;
        for (int j = 0; j <= k; j += 2) {
            acc += binomial(k, j) * std::pow(dist.mean, k - j) * std::pow(dist.std, j) * odd_double_factorial(j - 1);
        }
        return acc;
    }
    // Truncated normal: ratio of integrals over [-c, c].
    using boost::math::quadrature::gauss_kronrod;
    const double mu = dist.mean;
    const double sigma = dist.std;
    const double c = *dist.cutoff;
    auto density = [&](double x) {
        double u = (x - mu) / sigma;
        return std::exp(-0.5 * u * u);
    };
    // Split at the mean so the peak is resolved.
    std::vector<double> knots{-c};
    if (mu > -c && mu < c) {
        knots.push_back(mu);
    }
    knots.push_back(c);
    double mass = 0.0;
    double moment = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        mass += gauss_kronrod<double, 61>::integrate(density, knots[i], knots[i + 1], 15, 1e-12);
        moment += gauss_kronrod<double, 61>::integrate([&](double x) { return std::pow(x, k) * density(x); },
                                                        knots[i], knots[i + 1], 15, 1e-12);
    }
    if (!(mass > 0)) {
        throw std::runtime_error("truncated distribution has no mass inside the cutoff");
    }
    return moment / mass;
}

void NoiseModel::validate() const {
    std::vector<std::pair<std::size_t, Axis>> seen;
    for (const auto &c : components) {
        std::pair<std::size_t, Axis> key{c.index(), Axis::X};
        std::visit(
            [&](const auto &comp) {
                using T = std::decay_t<decltype(comp)>;
                key.second = comp.axis;
                if constexpr (std::is_same_v<T, LocalHamiltonian> || std::is_same_v<T, GlobalHamiltonian>) {
                    comp.dist.validate();
                } else if constexpr (std::is_same_v<T, TimeCorrelated>) {
                    comp.innovation.validate();
                    if (!(comp.beta >= 0 && comp.beta <= 1)) {
                        throw std::invalid_argument("beta must be in [0, 1]");
                    }
                } else {
                    if (!(comp.p >= 0 && comp.p <= 1)) {
                        throw std::invalid_argument("flip probability must be in [0, 1]");
                    }
                }
            },
            c);
        for (const auto &k : seen) {
            if (k == key) {
                throw std::invalid_argument("noise model has two components of the same kind on the same axis");
            }
        }
        seen.push_back(key);
    }
}

bool NoiseModel::has_time_correlation() const {
    for (const auto &c : components) {
        if (std::holds_alternative<TimeCorrelated>(c)) {
            return true;
        }
    }
    return false;
}

bool NoiseModel::is_discrete() const {
    for (const auto &c : components) {
        if (!std::holds_alternative<DiscretePauli>(c)) {
            return false;
        }
    }
    return true;
}

std::optional<Axis> NoiseModel::hamiltonian_axis() const {
    std::optional<Axis> axis;
    for (const auto &c : components) {
        if (std::holds_alternative<DiscretePauli>(c)) {
            continue;
        }
        Axis a = std::visit([](const auto &comp) { return comp.axis; }, c);
        if (axis && *axis != a) {
            return std::nullopt;
        }
        axis = a;
    }
    return axis;
}

std::string NoiseModel::str() const {
    std::string out;
    for (const auto &c : components) {
        if (!out.empty()) {
            out += '+';
        }
        std::visit(
            [&](const auto &comp) {
                using T = std::decay_t<decltype(comp)>;
                if constexpr (std::is_same_v<T, LocalHamiltonian>) {
                    out += std::string("ln:") + lower_axis(comp.axis) + ":" + comp.dist.str();
                } else if constexpr (std::is_same_v<T, GlobalHamiltonian>) {
                    out += std::string("gn:") + lower_axis(comp.axis) + ":" + comp.dist.str();
                } else if constexpr (std::is_same_v<T, TimeCorrelated>) {
                    out += std::string("tc:") + lower_axis(comp.axis) + ":" +
                           (comp.spatial == Spatial::local ? "local" : "global") + ":beta=" + fmt_double(comp.beta) +
                           ":" + comp.innovation.str();
                } else {
                    out += std::string("disc:") + lower_axis(comp.axis) + ":p=" + fmt_double(comp.p);
                }
            },
            c);
    }
    return out.empty() ? "none" : out;
}

NoiseModel parse_noise(std::string_view token) {
    NoiseModel model;
    if (token == "none") {
        return model;
    }
    for (std::string_view piece : split(token, '+')) {
        auto parts = split(piece, ':');
        if (parts.size() < 3) {
            throw std::invalid_argument("noise component '" + std::string(piece) + "' is too short");
        }
        std::string_view kind = parts[0];
        Axis axis = parse_axis(parts[1]);
        if (kind == "ln") {
            model.components.push_back(LocalHamiltonian{axis, parse_dist(parts, 2)});
        } else if (kind == "gn") {
            model.components.push_back(GlobalHamiltonian{axis, parse_dist(parts, 2)});
        } else if (kind == "tc") {
            if (parts.size() < 5) {
                throw std::invalid_argument("tc component needs <axis>:<local|global>:beta=<b>:<dist>");
            }
            Spatial spatial;
            if (parts[2] == "local") {
                spatial = Spatial::local;
            } else if (parts[2] == "global") {
                spatial = Spatial::global;
            } else {
                throw std::invalid_argument("tc spatial mode must be local or global");
            }
            double beta = parse_keyed(parts[3], "beta");
            model.components.push_back(TimeCorrelated{axis, spatial, beta, parse_dist(parts, 4)});
        } else if (kind == "disc") {
            if (parts.size() != 3) {
                throw std::invalid_argument("disc component needs <axis>:p=<p>");
            }
            model.components.push_back(DiscretePauli{axis, parse_keyed(parts[2], "p")});
        } else {
            throw std::invalid_argument("unknown noise kind '" + std::string(kind) + "'");
        }
    }
    model.validate();
    return model;
}

AngleDistribution parse_angle_distribution(std::string_view token) { return parse_dist(split(token, ':'), 0); }

NoiseProcessState init_process(const NoiseModel &model, std::size_t n_qubits, Rng &rng) {
    model.validate();
    NoiseProcessState state;
    state.n_qubits = n_qubits;
    state.correlated.resize(model.components.size());
    for (std::size_t i = 0; i < model.components.size(); ++i) {
        const auto *tc = std::get_if<TimeCorrelated>(&model.components[i]);
        if (tc == nullptr) {
            continue;
        }
        const AngleDistribution &delta = tc->innovation;
        std::size_t count = tc->spatial == Spatial::local ? n_qubits : 1;
        std::vector<double> &values = state.correlated[i];
        values.resize(count);
        if (tc->beta == 1.0) {
            if (delta.mean != 0.0 && !delta.cutoff) {
                log_warning("time-correlated component with beta=1 and nonzero innovation mean: the angle is one "
                            "frozen draw, not a drift");
            }
            for (double &v : values) {
                v = delta.sample(rng);
            }
            continue;
        }
        double root_beta = std::sqrt(tc->beta);
        double stationary_mean = std::sqrt(1.0 - tc->beta) * delta.mean / (1.0 - root_beta);
        for (double &v : values) {
            if (delta.kind == AngleDistribution::Kind::normal && !delta.cutoff) {
                v = stationary_mean + delta.std * rng.normal();
            } else {
                v = stationary_mean + (delta.sample(rng) - delta.mean);
            }
        }
    }
    return state;
}

NoiseSample sample_cycle(const NoiseModel &model, NoiseProcessState &state, std::uint64_t cycle_index, Rng &rng) {
    if (cycle_index != state.next_cycle) {
        throw std::logic_error("sample_cycle: expected cycle " + std::to_string(state.next_cycle) + ", got " +
                               std::to_string(cycle_index));
    }
    if (state.correlated.size() != model.components.size()) {
        throw std::logic_error("sample_cycle: process state does not belong to this model");
    }
    const std::size_t n = state.n_qubits;
    NoiseSample sample;
    sample.x_angles.assign(n, 0.0);
    sample.z_angles.assign(n, 0.0);
    auto angles_for = [&](Axis a) -> std::vector<double> & { return a == Axis::X ? sample.x_angles : sample.z_angles; };

    for (std::size_t i = 0; i < model.components.size(); ++i) {
        const NoiseComponent &c = model.components[i];
        if (const auto *ln = std::get_if<LocalHamiltonian>(&c)) {
            auto &angles = angles_for(ln->axis);
            for (std::size_t q = 0; q < n; ++q) {
                angles[q] += ln->dist.sample(rng);
            }
        } else if (const auto *gn = std::get_if<GlobalHamiltonian>(&c)) {
            double eps = gn->dist.sample(rng);
            for (double &a : angles_for(gn->axis)) {
                a += eps;
            }
        } else if (const auto *tc = std::get_if<TimeCorrelated>(&c)) {
            std::vector<double> &values = state.correlated[i];
            if (tc->beta != 1.0) {
                double keep = std::sqrt(tc->beta);
                double fresh = std::sqrt(1.0 - tc->beta);
                for (double &v : values) {
                    v = keep * v + fresh * tc->innovation.sample(rng);
                }
            }
            auto &angles = angles_for(tc->axis);
            for (std::size_t q = 0; q < n; ++q) {
                angles[q] += tc->spatial == Spatial::local ? values[q] : values[0];
            }
        } else {
            const auto &disc = std::get<DiscretePauli>(c);
            std::uint64_t flips = 0;
            for (std::size_t q = 0; q < n; ++q) {
                if (rng.bernoulli(disc.p)) {
                    flips |= std::uint64_t{1} << q;
                }
            }
            (disc.axis == Axis::X ? sample.x_flips : sample.z_flips) |= flips;
        }
    }
    ++state.next_cycle;
    return sample;
}

}  // namespace cohqec
