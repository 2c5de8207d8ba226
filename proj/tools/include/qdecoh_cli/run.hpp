// Copyright 2026 The qdecoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdecoh/smallmat.hpp"

namespace qdecoh::cli {

struct RunConfig {
  std::string command;  // classify, design, collide, evolve, entangle, checkcp
  std::string input;    // path or inline JSON; empty when absent
  std::string output;   // empty writes to stdout
  std::string format;   // csv or json; empty picks the command default
  double tau = 1.0;
  double tol = kDefaultTolerance;
  std::optional<std::size_t> nmax;
  std::string tgrid = "0:10:100";
  double overlap2 = 0.75;
  double alpha2 = 0.5;
  bool mesh = false;  // evolve: 1-degree Bloch sphere mesh instead of one state
};

struct RunResult {
  int exit_code = 0;
  std::string out;  // command output (also written to config.output if set)
  std::string err;  // error JSON on failure
};

/// Executes one command. Never throws; failures give exit code 2 and a JSON
/// error document in `err`.
RunResult run(const RunConfig& config);

/// {"error": {"code": ..., "message": ...}} followed by a newline.
std::string error_json(const std::string& code, const std::string& message);

/// Parses "t0:t1:steps" into steps + 1 evenly spaced, nondecreasing times.
std::vector<double> parse_tgrid(const std::string& spec);

}  // namespace qdecoh::cli
