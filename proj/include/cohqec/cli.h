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

#ifndef COHQEC_CLI_H
#define COHQEC_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace cohqec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Runs the command-line interface on `args` (program name excluded).
/// Subcommands: simulate, predict, fit, count-malignant, alpha-dist.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cohqec

#endif
