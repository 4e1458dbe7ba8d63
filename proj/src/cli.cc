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

#include "cohqec/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cohqec/curve_io.h"
#include "cohqec/experiments.h"
#include "cohqec/log.h"

namespace cohqec {

namespace {

using nlohmann::json;

struct SimulateArgs {
    std::string code = "rep:3";
    std::vector<std::string> noise;
    std::string strategy = "active";
    std::string init = "zero";
    std::string reference = "zero";
    std::size_t cycles = 1;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::string out;
    std::string overlay;
    bool allow_large = false;
    std::size_t workers = 0;
};

struct PredictArgs {
    std::string model;
    std::string code;
    std::string axis = "x";
    int d = 0;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> p;
    std::string dist = "const:0";
    std::size_t cycles = 1;
    std::string out;
};

struct FitArgs {
    std::string in;
    std::size_t min_cycle = 0;
    std::size_t max_cycle = static_cast<std::size_t>(-1);
};

struct CodeArgs {
    std::string code = "rep:3";
    std::string axis = "x";
    bool allow_large = false;
    std::optional<double> epsilon;
    std::vector<double> angles;
    std::string out;
};

Axis parse_axis_flag(const std::string &text) {
    if (text == "x" || text == "X") {
        return Axis::X;
    }
    if (text == "z" || text == "Z") {
        return Axis::Z;
    }
    throw std::invalid_argument("axis must be x or z");
}

std::string join_noise(const std::vector<std::string> &tokens) {
    if (tokens.empty()) {
        return "none";
    }
    std::string joined;
    for (const auto &t : tokens) {
        joined += (joined.empty() ? "" : "+") + t;
    }
    return joined;
}

std::string overlay_path(const std::string &out) {
    std::string stem = out;
    if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) {
        stem.resize(stem.size() - 4);
    }
    return stem + ".pred.csv";
}

void emit_curve(const FailureCurve &curve, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        write_curve(curve, out);
    } else {
        write_curve(curve, path);
    }
}

json support_list(std::uint64_t mask) {
    json qubits = json::array();
    for (std::size_t q = 0; q < 64; ++q) {
        if ((mask >> q) & 1) {
            qubits.push_back(q + 1);
        }
    }
    return qubits;
}

void run_simulate(const SimulateArgs &a, std::ostream &out) {
    ExperimentConfig config;
    config.code = a.code;
    config.noise = join_noise(a.noise);
    config.strategy = parse_strategy(a.strategy);
    config.init = parse_init_mode(a.init);
    config.reference = parse_logical_basis(a.reference);
    config.n_cycles = a.cycles;
    config.trials = a.trials;
    config.seed = a.seed;
    config.output_path = a.out;
    if (!a.overlay.empty()) {
        config.overlay_model = a.overlay;
    }
    config.allow_large = a.allow_large;
    config.workers = a.workers;
    config.validate();
    FailureCurve curve = run_experiment(config);
    write_curve(curve, a.out);
    out << "wrote " << curve.points.size() << " cycles to " << a.out << '\n';
    if (config.overlay_model) {
        PredictionInput input = prediction_input_for(config, *config.overlay_model);
        PredictedCurve pred = predict_by_name(*config.overlay_model, input);
        for (const auto &w : pred.warnings) {
            log_warning(w);
        }
        std::string path = overlay_path(a.out);
        write_curve(curve_from_prediction(pred, input), path);
        out << "wrote prediction '" << pred.model << "' to " << path << '\n';
    }
}

void run_predict(const PredictArgs &a, std::ostream &out) {
    PredictionInput input;
    input.d = a.d;
    if (!a.code.empty()) {
        StabilizerCode code = parse_code(a.code, true);
        MalignantCounts counts = malignant_counts_for(code, parse_axis_flag(a.axis));
        if (a.d == 0) {
            input.d = static_cast<int>(code.distance);
        }
        input.a_d = static_cast<double>(counts.a_d);
        input.b_d = static_cast<double>(counts.b_d);
    } else if (a.d == 0) {
        throw std::invalid_argument("predict needs --d or --code");
    }
    if (a.a) {
        input.a_d = *a.a;
    }
    if (a.b) {
        input.b_d = *a.b;
    }
    input.p = a.p;
    input.dist = parse_angle_distribution(a.dist);
    input.n_cycles = a.cycles;
    PredictedCurve pred = predict_by_name(a.model, input);
    for (const auto &w : pred.warnings) {
        log_warning(w);
    }
    emit_curve(curve_from_prediction(pred, input), a.out, out);
}

void run_fit(const FitArgs &a, std::ostream &out) {
    FailureCurve curve = read_curve(a.in);
    FitResult fit = fit_failure_curve(curve, a.min_cycle, a.max_cycle);
    json j;
    j["linear"] = fit.linear;
    j["linear_error"] = fit.linear_error();
    j["quadratic"] = fit.quadratic;
    j["quadratic_error"] = fit.quadratic_error();
    j["covariance"] = {{fit.covariance[0][0], fit.covariance[0][1]}, {fit.covariance[1][0], fit.covariance[1][1]}};
    j["reduced_chi_square"] = std::isfinite(fit.reduced_chi_square) ? json(fit.reduced_chi_square) : json(nullptr);
    j["points"] = fit.points;
    out << j.dump(2) << '\n';
}

void run_count(const CodeArgs &a, std::ostream &out) {
    StabilizerCode code = parse_code(a.code, a.allow_large);
    Axis axis = parse_axis_flag(a.axis);
    MalignantCounts counts = malignant_counts_for(code, axis);
    json j;
    j["code"] = code.name;
    j["axis"] = std::string(1, axis_letter(axis));
    j["distance"] = code.distance;
    j["set_size"] = counts.set_size;
    j["a_d"] = counts.a_d;
    j["b_d"] = counts.b_d;
    j["decoder"] = LookupDecoder::kTieBreakRule;
    json sets = json::array();
    for (std::uint64_t w : counts.witnesses) {
        sets.push_back(support_list(w));
    }
    j["malignant_sets"] = sets;
    out << j.dump(2) << '\n';
}

void run_alpha(const CodeArgs &a, std::ostream &out) {
    StabilizerCode code = parse_code(a.code, a.allow_large);
    Axis axis = parse_axis_flag(a.axis);
    std::vector<double> angles;
    if (a.epsilon && !a.angles.empty()) {
        throw std::invalid_argument("give either --epsilon or --angles");
    }
    if (a.epsilon) {
        angles.assign(code.n_qubits, *a.epsilon);
    } else if (a.angles.size() == code.n_qubits) {
        angles = a.angles;
    } else {
        throw std::invalid_argument("--angles needs one value per qubit (" + std::to_string(code.n_qubits) + ")");
    }
    AlphaDistribution dist = exact_alpha_distribution(code, axis, angles);

    std::ostringstream body;
    body << "# code=" << code.name << '\n';
    body << "# axis=" << axis_letter(axis) << '\n';
    body << "# alpha=amplitude of the logical flip over the reference amplitude in each corrected branch\n";
    body << "# total_probability=" << format_double(dist.total_probability()) << '\n';
    body << "# mean_abs_alpha_squared=" << format_double(dist.mean_abs_alpha_squared()) << '\n';
    body << "syndrome,probability,alpha_re,alpha_im,abs_alpha\n";
    for (const auto &e : dist.entries) {
        body << e.syndrome.str() << ',' << format_double(e.probability) << ',';
        if (e.alpha) {
            body << format_double(e.alpha->real()) << ',' << format_double(e.alpha->imag()) << ','
                 << format_double(std::abs(*e.alpha));
        } else {
            body << ",,";
        }
        body << '\n';
    }
    if (a.out.empty() || a.out == "-") {
        out << body.str();
    } else {
        std::ofstream file(a.out, std::ios::binary);
        if (!file || !(file << body.str())) {
            throw std::runtime_error("cannot write '" + a.out + "'");
        }
    }
}

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    std::size_t e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

// Replaces "--config <path>" with the file's key=value pairs as flags. Keys already given on the
// command line win; "true"/"false" values switch bare flags on or off.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::vector<std::string> rest;
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                throw ConfigError("--config needs a path");
            }
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) {
        return rest;
    }
    std::ifstream file(path);
    if (!file) {
        throw ConfigError("cannot open config '" + path + "'");
    }
    std::vector<std::string> injected;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        std::string text = trim(line);
        if (text.empty() || text[0] == '#' || text[0] == ';') {
            continue;
        }
        std::size_t eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        std::string key = trim(std::string_view(text).substr(0, eq));
        std::string value = trim(std::string_view(text).substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
            value = value.substr(1, value.size() - 2);
        }
        std::replace(key.begin(), key.end(), '_', '-');
        std::string flag = "--" + key;
        bool on_command_line = std::any_of(rest.begin(), rest.end(), [&](const std::string &a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (on_command_line) {
            continue;
        }
        if (value == "true") {
            injected.push_back(flag);
        } else if (value != "false") {
            injected.push_back(flag);
            injected.push_back(value);
        }
    }
    if (rest.empty()) {
        return injected;
    }
    std::vector<std::string> out{rest.front()};
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), rest.begin() + 1, rest.end());
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Coherent-noise QEC simulator and analytic failure-rate predictor", "cohqec"};
    app.require_subcommand(1);
    std::string config_path;

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo failure curve -> CSV");
    simulate->add_option("--config", config_path, "flat key=value file mirroring the flags");
    simulate->add_option("--code", sim.code, "rep:<d> or surface:<d>")->capture_default_str();
    simulate->add_option("--noise", sim.noise, "noise token(s), e.g. ln:x:normal:0:0.1 disc:z:p=0.01");
    simulate->add_option("--strategy", sim.strategy, "active or passive")->capture_default_str();
    simulate->add_option("--init", sim.init, "zero or random")->capture_default_str();
    simulate->add_option("--reference", sim.reference, "zero or plus")->capture_default_str();
    simulate->add_option("--cycles", sim.cycles)->required();
    simulate->add_option("--trials", sim.trials)->required();
    simulate->add_option("--seed", sim.seed)->capture_default_str();
    simulate->add_option("--out", sim.out, "output CSV")->required();
    simulate->add_option("--overlay", sim.overlay, "also write <out>.pred.csv from this prediction model");
    simulate->add_flag("--allow-large", sim.allow_large, "permit surface codes beyond d=3");
    simulate->add_option("--workers", sim.workers, std::string("threads (default: $") + kWorkersEnv + " or 1)");

    PredictArgs pre;
    auto *predict = app.add_subcommand("predict", "analytic failure curve -> CSV");
    predict->add_option("--config", config_path, "flat key=value file mirroring the flags");
    predict->add_option("--model", pre.model, "prediction model")->required()->check(CLI::IsMember(prediction_models()));
    predict->add_option("--code", pre.code, "take d, a_d, b_d from this code");
    predict->add_option("--axis", pre.axis, "error axis for --code")->capture_default_str();
    predict->add_option("--d", pre.d, "code distance");
    predict->add_option("--a", pre.a, "a_d");
    predict->add_option("--b", pre.b, "b_d");
    predict->add_option("--p", pre.p, "discrete flip probability");
    predict->add_option("--dist", pre.dist, "angle law: const:<v> | normal:<mean>:<std> | uniform:<mean>:<std>")
        ->capture_default_str();
    predict->add_option("--cycles", pre.cycles)->required();
    predict->add_option("--out", pre.out, "output CSV (default stdout)");

    FitArgs fit;
    auto *fitcmd = app.add_subcommand("fit", "fit P(n) = A n + B (n^2 - n) to a curve CSV; prints JSON");
    fitcmd->add_option("--config", config_path, "flat key=value file mirroring the flags");
    fitcmd->add_option("--in", fit.in, "curve CSV")->required();
    fitcmd->add_option("--min-cycle", fit.min_cycle);
    fitcmd->add_option("--max-cycle", fit.max_cycle);

    CodeArgs cnt;
    auto *count = app.add_subcommand("count-malignant", "lowest-weight malignant sets; prints JSON");
    count->add_option("--config", config_path, "flat key=value file mirroring the flags");
    count->add_option("--code", cnt.code)->capture_default_str();
    count->add_option("--axis", cnt.axis)->capture_default_str();
    count->add_flag("--allow-large", cnt.allow_large);

    CodeArgs alp;
    auto *alpha = app.add_subcommand("alpha-dist", "exact per-syndrome alpha after one noisy step -> CSV");
    alpha->add_option("--config", config_path, "flat key=value file mirroring the flags");
    alpha->add_option("--code", alp.code)->capture_default_str();
    alpha->add_option("--axis", alp.axis)->capture_default_str();
    alpha->add_option("--epsilon", alp.epsilon, "same angle on every qubit");
    alpha->add_option("--angles", alp.angles, "one angle per qubit")->delimiter(',');
    alpha->add_option("--out", alp.out, "output CSV (default stdout)");

    try {
        std::vector<std::string> expanded = expand_config(args);
        std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App *scope = &app;
        for (const auto *sub : app.get_subcommands()) {
            scope = sub;
        }
        err << scope->help();
        return kExitUsage;
    }

    WarningSink previous = set_warning_sink([&err](std::string_view msg) { err << "warning: " << msg << '\n'; });
    struct Restore {
        WarningSink sink;
        ~Restore() { set_warning_sink(std::move(sink)); }
    } restore{std::move(previous)};

    try {
        if (simulate->parsed()) {
            run_simulate(sim, out);
        } else if (predict->parsed()) {
            run_predict(pre, out);
        } else if (fitcmd->parsed()) {
            run_fit(fit, out);
        } else if (count->parsed()) {
            run_count(cnt, out);
        } else if (alpha->parsed()) {
            run_alpha(alp, out);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace cohqec
