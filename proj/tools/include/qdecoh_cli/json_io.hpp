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

// JSON and CSV plumbing for the command-line front end.

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qdecoh/qdecoh.hpp"

namespace qdecoh::cli {

using Json = nlohmann::ordered_json;

/// Failure with a stable machine-readable code, reported on stderr as
/// {"error": {"code": ..., "message": ...}}.
class CliError : public std::runtime_error {
 public:
  CliError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Inline JSON when the argument starts with '{', otherwise a file path.
Json load_input(const std::string& input);

/// 12 significant digits; -0 prints as 0.
std::string format_number(double x);
/// Rounds to the printed precision so JSON and CSV agree.
double round_for_output(double x);

ComplexMatrix parse_complex_matrix(const Json& j, std::string_view field,
                                   std::size_t rows, std::size_t cols);
RealMatrix parse_real_matrix(const Json& j, std::string_view field,
                             std::size_t rows, std::size_t cols);
Json complex_matrix_to_json(const ComplexMatrix& m);

/// Rejects keys outside `allowed`.
void require_keys(const Json& j, std::string_view where,
                  const std::set<std::string>& allowed);

struct ChannelInput {
  TransferMatrix transfer;  // computational frame
  /// Present when the input used the {"decoherence": ...} form.
  std::optional<Classification> declared;
};

/// {"transfer": 4x4} or {"decoherence": {"lambda", "phi", "basis"?}}.
/// Extra top-level keys listed in `extra` are tolerated.
ChannelInput parse_channel(const Json& j, double tol,
                           const std::set<std::string>& extra = {});

/// {"V0", "V1", "xi", "basis"?}, plus any keys in `extra`.
CollisionSpec parse_collision_spec(const Json& j, double tol,
                                   const std::set<std::string>& extra = {});
Json collision_spec_to_json(const CollisionSpec& spec);

/// Optional 2x2 "rho" field; nullopt when absent.
std::optional<DensityMatrix> parse_optional_rho(const Json& j, double tol);

}  // namespace qdecoh::cli
