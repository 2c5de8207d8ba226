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

#include "qdecoh_cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qdecoh::cli {
namespace {

[[noreturn]] void schema_error(std::string_view field, std::string_view what) {
  throw CliError("schema_violation", std::string(field) + ": " + std::string(what));
}

double parse_number(const Json& j, std::string_view field) {
  if (!j.is_number()) schema_error(field, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema_error(field, "expected a finite number");
  return x;
}

const Json& row_of(const Json& j, std::string_view field, std::size_t rows,
                   std::size_t cols, std::size_t i) {
  if (!j.is_array() || j.size() != rows) {
    schema_error(field, "expected " + std::to_string(rows) + " rows");
  }
  const Json& row = j[i];
  if (!row.is_array() || row.size() != cols) {
    schema_error(field, "expected " + std::to_string(cols) + " columns");
  }
  return row;
}

}  // namespace

Json load_input(const std::string& input) {
  std::string text;
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{') {
    text = input;
  } else {
    std::ifstream in(input);
    if (!in) throw CliError("io_error", "cannot read input file '" + input + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    Json j = Json::parse(text);
    if (!j.is_object()) throw CliError("schema_violation", "input must be a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw CliError("malformed_json", e.what());
  }
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

double round_for_output(double x) { return std::stod(format_number(x)); }

ComplexMatrix parse_complex_matrix(const Json& j, std::string_view field,
                                   std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = row_of(j, field, rows, cols, i);
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& z = row[k];
      if (z.is_number()) {
        m(i, k) = parse_number(z, field);
      } else if (z.is_array() && z.size() == 2) {
        m(i, k) = Complex{parse_number(z[0], field), parse_number(z[1], field)};
      } else {
        schema_error(field, "entries must be [re, im] pairs");
      }
    }
  }
  return m;
}

RealMatrix parse_real_matrix(const Json& j, std::string_view field,
                             std::size_t rows, std::size_t cols) {
  RealMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = row_of(j, field, rows, cols, i);
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_number(row[k], field);
  }
  return m;
}

Json complex_matrix_to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      row.push_back(Json::array(
          {round_for_output(m(i, k).real()), round_for_output(m(i, k).imag())}));
    }
    out.push_back(std::move(row));
  }
  return out;
}

void require_keys(const Json& j, std::string_view where,
                  const std::set<std::string>& allowed) {
  if (!j.is_object()) schema_error(where, "expected an object");
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) schema_error(where, "unknown key '" + item.key() + "'");
  }
}

ChannelInput parse_channel(const Json& j, double tol,
                           const std::set<std::string>& extra) {
  std::set<std::string> allowed = extra;
  allowed.insert({"transfer", "decoherence"});
  require_keys(j, "channel", allowed);
  const bool has_transfer = j.contains("transfer");
  const bool has_decoherence = j.contains("decoherence");
  if (has_transfer == has_decoherence) {
    schema_error("channel", "exactly one of 'transfer' or 'decoherence' is required");
  }
  if (has_transfer) {
    return {TransferMatrix(parse_real_matrix(j["transfer"], "transfer", 4, 4), tol),
            std::nullopt};
  }
  const Json& d = j["decoherence"];
  require_keys(d, "decoherence", {"lambda", "phi", "basis"});
  if (!d.contains("lambda") || !d.contains("phi")) {
    schema_error("decoherence", "'lambda' and 'phi' are required");
  }
  const DecoherenceParams params(parse_number(d["lambda"], "lambda"),
                                 parse_number(d["phi"], "phi"));
  DecoherenceBasis basis;
  if (d.contains("basis")) {
    basis = DecoherenceBasis::from_unitary(parse_complex_matrix(d["basis"], "basis", 2, 2),
                                           tol);
  }
  const TransferMatrix e =
      to_computational_frame(make_decoherence_channel(params), basis);
  return {e, Classification{basis, params}};
}

CollisionSpec parse_collision_spec(const Json& j, double tol,
                                   const std::set<std::string>& extra) {
  std::set<std::string> allowed = extra;
  allowed.insert({"V0", "V1", "xi", "basis"});
  require_keys(j, "collision spec", allowed);
  for (const char* key : {"V0", "V1", "xi"}) {
    if (!j.contains(key)) schema_error("collision spec", std::string("missing '") + key + "'");
  }
  CollisionSpec spec;
  spec.v0 = parse_complex_matrix(j["V0"], "V0", 2, 2);
  spec.v1 = parse_complex_matrix(j["V1"], "V1", 2, 2);
  spec.xi = DensityMatrix::from_matrix(parse_complex_matrix(j["xi"], "xi", 2, 2), tol);
  if (j.contains("basis")) {
    spec.basis =
        DecoherenceBasis::from_unitary(parse_complex_matrix(j["basis"], "basis", 2, 2), tol);
  }
  spec.validate(tol);
  return spec;
}

Json collision_spec_to_json(const CollisionSpec& spec) {
  Json out = Json::object();
  out["V0"] = complex_matrix_to_json(spec.v0);
  out["V1"] = complex_matrix_to_json(spec.v1);
  out["xi"] = complex_matrix_to_json(spec.xi.matrix());
  out["basis"] = complex_matrix_to_json(spec.basis.unitary());
  return out;
}

std::optional<DensityMatrix> parse_optional_rho(const Json& j, double tol) {
  if (!j.contains("rho")) return std::nullopt;
  return DensityMatrix::from_matrix(parse_complex_matrix(j["rho"], "rho", 2, 2), tol);
}

}  // namespace qdecoh::cli
