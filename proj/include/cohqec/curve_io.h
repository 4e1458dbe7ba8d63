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

#ifndef COHQEC_CURVE_IO_H
#define COHQEC_CURVE_IO_H

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cohqec/experiments.h"

namespace cohqec {

/// Malformed curve files and curves that violate the schema invariants.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Column header of simulated curves; predicted curves append ",source".
inline constexpr const char *kCurveHeader = "cycle,mean_failure,std_error,trials";

/// Writes '#'-prefixed "key=value" metadata lines, the header and one row per cycle.
/// Doubles use the shortest round-trip representation.
void write_curve(const FailureCurve &curve, std::ostream &out);
void write_curve(const FailureCurve &curve, const std::string &path);

FailureCurve read_curve(std::istream &in);
FailureCurve read_curve(const std::string &path);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace cohqec

#endif
