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

#include "cohqec/curve_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace cohqec {

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

template <typename T>
T parse_field(std::string_view text, std::size_t line_no, const char *column) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw SchemaError("line " + std::to_string(line_no) + ": bad " + column + " '" + std::string(text) + "'");
    }
    return value;
}

void strip_cr(std::string &line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

void check_point(const CurvePoint &p, bool predicted) {
    const std::string where = "cycle " + std::to_string(p.cycle);
    if (!std::isfinite(p.mean_failure) || p.mean_failure < 0.0 || p.mean_failure > 1.0) {
        throw SchemaError(where + ": mean_failure outside [0, 1]");
    }
    if (!std::isfinite(p.std_error) || p.std_error < 0.0) {
        throw SchemaError(where + ": negative or non-finite std_error");
    }
    if (!predicted && p.trials == 0) {
        throw SchemaError(where + ": zero trials");
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void write_curve(const FailureCurve &curve, std::ostream &out) {
    const bool predicted = !curve.source.empty();
    for (const auto &p : curve.points) {
        check_point(p, predicted);
    }
    for (const auto &[key, value] : curve.metadata) {
        if (key.find_first_of("=\n\r") != std::string::npos || value.find_first_of("\n\r") != std::string::npos) {
            throw SchemaError("metadata '" + key + "' cannot be written on one line");
        }
        out << "# " << key << '=' << value << '\n';
    }
    out << kCurveHeader << (predicted ? ",source" : "") << '\n';
    for (const auto &p : curve.points) {
        out << p.cycle << ',' << format_double(p.mean_failure) << ',' << format_double(p.std_error) << ',' << p.trials;
        if (predicted) {
            out << ',' << curve.source;
        }
        out << '\n';
    }
}

void write_curve(const FailureCurve &curve, const std::string &path) {
    std::ostringstream buffer;
    write_curve(curve, buffer);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    file << buffer.str();
    if (!file) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

FailureCurve read_curve(std::istream &in) {
    FailureCurve curve;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t columns = 4;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (!have_header) {
            if (!line.empty() && line[0] == '#') {
                std::string_view body(line);
                body.remove_prefix(1);
                if (!body.empty() && body[0] == ' ') {
                    body.remove_prefix(1);
                }
                std::size_t eq = body.find('=');
                if (eq == std::string_view::npos) {
                    throw SchemaError("line " + std::to_string(line_no) + ": metadata without '='");
                }
                curve.metadata.emplace_back(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
                continue;
            }
            if (line == kCurveHeader) {
                columns = 4;
            } else if (line == std::string(kCurveHeader) + ",source") {
                columns = 5;
            } else {
                throw SchemaError("line " + std::to_string(line_no) + ": expected header '" + kCurveHeader + "'");
            }
            have_header = true;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        auto fields = split_commas(line);
        if (fields.size() != columns) {
            throw SchemaError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                              " columns, found " + std::to_string(fields.size()));
        }
        CurvePoint p;
        p.cycle = parse_field<std::size_t>(fields[0], line_no, "cycle");
        p.mean_failure = parse_field<double>(fields[1], line_no, "mean_failure");
        p.std_error = parse_field<double>(fields[2], line_no, "std_error");
        p.trials = parse_field<std::size_t>(fields[3], line_no, "trials");
        if (columns == 5) {
            std::string source(fields[4]);
            if (source.empty() || (!curve.source.empty() && source != curve.source)) {
                throw SchemaError("line " + std::to_string(line_no) + ": inconsistent source column");
            }
            curve.source = source;
        }
        check_point(p, columns == 5);
        curve.points.push_back(p);
    }
    if (!have_header) {
        throw SchemaError("missing header line");
    }
    return curve;
}

FailureCurve read_curve(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return read_curve(file);
}

}  // namespace cohqec
