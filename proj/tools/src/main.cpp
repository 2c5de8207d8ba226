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

#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "qdecoh_cli/run.hpp"

int main(int argc, char** argv) {
  qdecoh::cli::RunConfig config;
  CLI::App app{"qdecoh: qubit decoherence channels, collision models and entanglement"};
  app.require_subcommand(1, 1);

  std::size_t nmax = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", config.input, "JSON file path or inline JSON");
    sub->add_option("--output,-o", config.output, "write output here instead of stdout");
    sub->add_option("--format,-f", config.format, "csv or json");
    sub->add_option("--tol", config.tol, "numerical tolerance")->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "detect a decoherence basis and (lambda, phi)");
  auto* design = app.add_subcommand("design", "collision spec realizing a decoherence channel");
  auto* collide = app.add_subcommand("collide", "simulate repeated collisions");
  auto* evolve = app.add_subcommand("evolve", "integrate the decoherence semigroup");
  auto* entangle = app.add_subcommand("entangle", "tangle and CKW report along the collisions");
  auto* checkcp = app.add_subcommand("checkcp", "Choi and tetrahedron positivity test");
  for (CLI::App* sub : {classify, design, collide, evolve, entangle, checkcp}) add_common(sub);

  std::vector<CLI::Option*> nmax_options;
  for (CLI::App* sub : {collide, entangle})
    nmax_options.push_back(sub->add_option("--nmax,-n", nmax, "number of collisions"));
  for (CLI::App* sub : {collide, evolve, entangle})
    sub->add_option("--alpha2", config.alpha2, "|alpha|^2 of the initial system state")
        ->capture_default_str();
  evolve->add_option("--tau", config.tau, "time scale")->capture_default_str();
  evolve->add_option("--tgrid", config.tgrid, "t0:t1:steps")->capture_default_str();
  evolve->add_flag("--mesh", config.mesh, "map a 1-degree Bloch sphere mesh");
  entangle->add_option("--overlap2", config.overlap2, "|<psi0|psi1>|^2")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << qdecoh::cli::error_json("usage", e.what());
    return 2;
  }

  config.command = app.get_subcommands().front()->get_name();
  for (const CLI::Option* opt : nmax_options)
    if (opt->count()) config.nmax = nmax;

  const qdecoh::cli::RunResult result = qdecoh::cli::run(config);
  if (result.exit_code != 0) {
    std::cerr << result.err;
    return result.exit_code;
  }
  if (config.output.empty()) std::cout << result.out;
  return 0;
}
