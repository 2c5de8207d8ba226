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

#include "qdecoh_cli/run.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qdecoh_cli/json_io.hpp"

namespace qdecoh::cli {
namespace {

constexpr std::size_t kDefaultCollisions = 10;
constexpr std::size_t kDefaultAnalyticCollisions = 30;
constexpr std::size_t kDefaultNetworkCollisions = 8;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string table_to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) out += ',';
    out += t.header[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

Json table_to_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (double x : row) r.push_back(round_for_output(x));
    rows.push_back(std::move(r));
  }
  Json out = Json::object();
  out["columns"] = t.header;
  out["rows"] = std::move(rows);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string resolve_format(const RunConfig& c, bool tabular) {
  const std::string fmt = c.format.empty() ? (tabular ? "csv" : "json") : c.format;
  if (fmt != "csv" && fmt != "json") {
    throw CliError("usage", "--format must be csv or json");
  }
  if (!tabular && fmt == "csv") {
    throw CliError("usage", "command '" + c.command + "' only emits json");
  }
  return fmt;
}

std::string emit(const RunConfig& c, const Table& t) {
  return resolve_format(c, true) == "csv" ? table_to_csv(t) : dump(table_to_json(t));
}

Json require_input(const RunConfig& c) {
  if (c.input.empty()) {
    throw CliError("usage", "command '" + c.command + "' requires --input");
  }
  return load_input(c.input);
}

void check_fraction(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, std::string(name) + " must lie in [0, 1]");
  }
}

// alpha|e0> + beta|e1> with |alpha|^2 = alpha2, in the given control basis.
DensityMatrix initial_state(const RunConfig& c, const DecoherenceBasis& basis) {
  check_fraction(c.alpha2, "--alpha2");
  const double alpha = std::sqrt(c.alpha2);
  const double beta = std::sqrt(1.0 - c.alpha2);
  const ComplexMatrix chi = basis.ket(0) * Complex{alpha} + basis.ket(1) * Complex{beta};
  return DensityMatrix::from_matrix(chi * chi.adjoint(), c.tol);
}

std::string basis_label(const std::array<double, 3>& axis) {
  static const char* const kLabels[] = {"x", "y", "z"};
  for (std::size_t j = 0; j < 3; ++j) {
    if (std::abs(axis[j] - 1.0) < 1e-9) return kLabels[j];
  }
  return "custom";
}

Classification require_decoherence(const ChannelInput& ch, double tol) {
  if (ch.declared) return *ch.declared;
  const CpVerdict cp = is_completely_positive(ch.transfer, {}, tol);
  if (!cp.completely_positive) {
    throw Error(ErrorCode::kNotCompletelyPositive,
                "Choi matrix has eigenvalue " + format_number(cp.min_choi_eigenvalue));
  }
  auto cls = classify_decoherence(ch.transfer, tol);
  if (!cls) throw CliError("not_decoherence", "channel has no decoherence basis");
  return *cls;
}

std::string run_classify(const RunConfig& c) {
  resolve_format(c, false);
  const ChannelInput ch = parse_channel(require_input(c), c.tol);
  const CpVerdict cp = is_completely_positive(ch.transfer, {}, c.tol);
  if (!cp.completely_positive) {
    throw Error(ErrorCode::kNotCompletelyPositive,
                "Choi matrix has eigenvalue " + format_number(cp.min_choi_eigenvalue));
  }
  Json out = Json::object();
  const auto cls = classify_decoherence(ch.transfer, c.tol);
  if (!cls) {
    out["decoherence"] = false;
    return dump(out);
  }
  const auto axis = cls->basis.axis();
  out["decoherence"] = cls->params.is_decoherence(c.tol);
  out["lambda"] = round_for_output(cls->params.lambda());
  out["phi"] = round_for_output(cls->params.phi());
  out["basis"] = basis_label(axis);
  out["axis"] = Json::array({round_for_output(axis[0]), round_for_output(axis[1]),
                             round_for_output(axis[2])});
  out["W"] = complex_matrix_to_json(cls->basis.unitary());
  return dump(out);
}

std::string run_checkcp(const RunConfig& c) {
  resolve_format(c, false);
  const ChannelInput ch = parse_channel(require_input(c), c.tol);
  const CpVerdict cp = is_completely_positive(ch.transfer, {}, c.tol);
  Json out = Json::object();
  out["completely_positive"] = cp.completely_positive;
  out["min_choi_eigenvalue"] = round_for_output(cp.min_choi_eigenvalue);
  const bool unital = ch.transfer.is_unital(c.tol);
  out["unital"] = unital;
  if (unital) {
    const RotationSvd svd = svd_decompose(ch.transfer, c.tol);
    Json sv = Json::array();
    for (double l : svd.singular_values) sv.push_back(round_for_output(l));
    out["singular_values"] = std::move(sv);
    out["tetrahedron"] = in_tetrahedron(svd.singular_values, c.tol);
  }
  return dump(out);
}

std::string run_design(const RunConfig& c) {
  resolve_format(c, false);
  const Classification cls = require_decoherence(parse_channel(require_input(c), c.tol), c.tol);
  const CollisionSpec spec = design_collision(cls.params, cls.basis);
  spec.validate(c.tol);
  return dump(collision_spec_to_json(spec));
}

std::string run_collide(const RunConfig& c) {
  const Json in = require_input(c);
  const CollisionSpec spec = parse_collision_spec(in, c.tol, {"rho"});
  const DensityMatrix rho0 = parse_optional_rho(in, c.tol).value_or(initial_state(c, spec.basis));
  const auto states =
      simulate_collisions(spec, rho0, c.nmax.value_or(kDefaultCollisions), c.tol);
  Table t{{"n", "r_x", "r_y", "r_z", "purity", "coherence"}, {}};
  for (std::size_t n = 0; n < states.size(); ++n) {
    const BlochVector r = to_bloch(states[n]);
    const double coherence = std::abs(states[n].in_basis(spec.basis)(0, 1));
    t.rows.push_back({static_cast<double>(n), r[0], r[1], r[2], states[n].purity(), coherence});
  }
  return emit(c, t);
}

std::string run_evolve(const RunConfig& c) {
  const Json in = require_input(c);
  const Classification cls = require_decoherence(parse_channel(in, c.tol, {"rho"}), c.tol);
  const Generator g = generator_from_params(cls.params, c.tau);
  const std::vector<double> grid = parse_tgrid(c.tgrid);

  if (c.mesh) {
    if (in.contains("rho")) throw CliError("usage", "--mesh ignores 'rho'; remove one");
    Table t{{"t", "theta_deg", "phi_deg", "r_x", "r_y", "r_z"}, {}};
    const double deg = std::numbers::pi / 180.0;
    for (double time : grid) {
      const TransferMatrix e = to_computational_frame(propagator(g, time), cls.basis);
      for (int theta = 0; theta <= 180; ++theta) {
        for (int az = 0; az < 360; ++az) {
          const double r[3] = {std::sin(theta * deg) * std::cos(az * deg),
                               std::sin(theta * deg) * std::sin(az * deg),
                               std::cos(theta * deg)};
          std::vector<double> row{time, static_cast<double>(theta), static_cast<double>(az)};
          for (std::size_t k = 1; k < 4; ++k) {
            row.push_back(e(k, 0) + e(k, 1) * r[0] + e(k, 2) * r[1] + e(k, 3) * r[2]);
          }
          t.rows.push_back(std::move(row));
        }
      }
    }
    return emit(c, t);
  }

  const DensityMatrix rho0 = parse_optional_rho(in, c.tol).value_or(initial_state(c, cls.basis));
  const auto states = evolve(g, rho0, grid, cls.basis, c.tol);
  Table t{{"t", "r_x", "r_y", "r_z", "purity"}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const BlochVector r = to_bloch(states[i]);
    t.rows.push_back({grid[i], r[0], r[1], r[2], states[i].purity()});
  }
  return emit(c, t);
}

std::string run_entangle(const RunConfig& c) {
  check_fraction(c.alpha2, "--alpha2");
  const Complex alpha{std::sqrt(c.alpha2)};
  const Complex beta{std::sqrt(1.0 - c.alpha2)};
  Table t{{"n", "tau0", "tauk", "tau0k", "sum_tau0k", "delta"}, {}};

  if (c.input.empty()) {
    check_fraction(c.overlap2, "--overlap2");
    const double overlap = std::sqrt(c.overlap2);
    const std::size_t nmax = c.nmax.value_or(kDefaultAnalyticCollisions);
    for (std::size_t n = 1; n <= nmax; ++n) {
      const EntanglementReport r = analytic_tangles(overlap, alpha, beta, n);
      t.rows.push_back({static_cast<double>(n), r.tau0, r.tauk, r.tau0k.front(),
                        r.sum_tau0k(), r.delta});
    }
    return emit(c, t);
  }

  // Statevector path: N = nmax reservoir qubits, residuals averaged over the
  // system and the n collided qubits as in the closed form.
  const CollisionSpec spec = parse_collision_spec(load_input(c.input), c.tol);
  const std::size_t nmax = c.nmax.value_or(kDefaultNetworkCollisions);
  if (nmax + 1 > kMaxCkwQubits) {
    throw Error(ErrorCode::kRegisterTooLarge,
                "statevector entangle supports --nmax up to " +
                    std::to_string(kMaxCkwQubits - 1));
  }
  for (std::size_t n = 1; n <= nmax; ++n) {
    const EntanglementReport r = ckw_check(evolve_network(spec, alpha, beta, nmax, n, c.tol), c.tol);
    double delta = 0.0;
    double sum = 0.0;
    for (std::size_t j = 0; j <= n; ++j) delta += r.delta_j[j];
    for (std::size_t k = 0; k < n; ++k) sum += r.tau0k[k];
    t.rows.push_back({static_cast<double>(n), r.tau0, r.tangles[1], r.tau0k.front(), sum,
                      delta / static_cast<double>(n + 1)});
  }
  return emit(c, t);
}

std::string dispatch(const RunConfig& c) {
  if (!(c.tol > 0.0)) throw CliError("usage", "--tol must be positive");
  if (!(c.tau > 0.0)) throw Error(ErrorCode::kInvalidParameter, "--tau must be positive");
  if (c.command == "classify") return run_classify(c);
  if (c.command == "design") return run_design(c);
  if (c.command == "collide") return run_collide(c);
  if (c.command == "evolve") return run_evolve(c);
  if (c.command == "entangle") return run_entangle(c);
  if (c.command == "checkcp") return run_checkcp(c);
  throw CliError("usage", "unknown command '" + c.command + "'");
}

}  // namespace

std::string error_json(const std::string& code, const std::string& message) {
  Json e = Json::object();
  e["code"] = code;
  e["message"] = message;
  Json doc = Json::object();
  doc["error"] = std::move(e);
  return doc.dump() + "\n";
}

std::vector<double> parse_tgrid(const std::string& spec) {
  std::istringstream ss(spec);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw CliError("usage", "--tgrid must look like t0:t1:steps");
  double t0 = 0.0, t1 = 0.0;
  long steps = 0;
  try {
    std::size_t used = 0;
    t0 = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("t0");
    t1 = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("t1");
    steps = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("steps");
  } catch (const std::logic_error&) {
    throw CliError("usage", "--tgrid has a malformed number");
  }
  if (!std::isfinite(t0) || !std::isfinite(t1) || t0 < 0.0 || t1 < t0 || steps < 0) {
    throw CliError("usage", "--tgrid needs 0 <= t0 <= t1 and steps >= 0");
  }
  std::vector<double> grid;
  for (long i = 0; i <= steps; ++i) {
    grid.push_back(steps == 0 ? t0 : t0 + (t1 - t0) * static_cast<double>(i) /
                                              static_cast<double>(steps));
  }
  return grid;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    result.out = dispatch(config);
    if (!config.output.empty()) {
      std::ofstream f(config.output, std::ios::binary);
      if (!f || !(f << result.out)) {
        throw CliError("io_error", "cannot write '" + config.output + "'");
      }
    }
  } catch (const CliError& e) {
    result = {2, "", error_json(e.code(), e.what())};
  } catch (const Error& e) {
    result = {2, "", error_json(std::string(to_string(e.code())), e.what())};
  } catch (const std::exception& e) {
    result = {2, "", error_json("internal_error", e.what())};
  }
  return result;
}

}  // namespace qdecoh::cli
