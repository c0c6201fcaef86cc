// Copyright 2026 The csvent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: sweeps, density dumps, analysis and checkpoints.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "csvent/checkpoints.hpp"
#include "csvent/config.hpp"
#include "csvent/density_io.hpp"
#include "csvent/sweep.hpp"

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kCheckpointFailure = 2, kSolverFailure = 3 };

using Overrides = std::map<std::string, std::optional<std::string>>;

void add_overrides(CLI::App* cmd, Overrides& overrides) {
  for (const std::string& key : csvent::config_keys()) {
    if (key == "out" || key == "plot") continue;  // explicit options
    cmd->add_option("--" + key, overrides[key], "override config key '" + key + "'");
  }
}

csvent::SweepConfig resolve_config(const std::string& path, const Overrides& overrides) {
  csvent::SweepConfig config = csvent::load_config(path);
  for (const auto& [key, value] : overrides) {
    if (value) csvent::apply_setting(config, key, *value);
  }
  csvent::validate_config(config);
  return config;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw csvent::ParameterError("cannot write '" + path + "'");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cauchy-Schwarz violation and negativity toolkit for spin-boson models"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string plot_path;
  Overrides sweep_overrides;
  auto* sweep = app.add_subcommand("sweep", "S, sqrt(S) and N over the lambda grid");
  sweep->add_option("--config", config_path, "key = value config file")->required();
  sweep->add_option("--out", out_path, "CSV output (default: config 'out' or stdout)");
  sweep->add_option("--plot", plot_path, "SVG plot output");
  add_overrides(sweep, sweep_overrides);

  std::string density_path;
  std::string analyze_config;
  std::optional<double> analyze_lambda;
  int top_k = 10;
  auto* analyze = app.add_subcommand("analyze", "report S, N and violating pairs of a dump");
  analyze->add_option("density", density_path, "density dump file")->required();
  analyze->add_option("--config", analyze_config,
                      "config used to rebuild H for energy-basis populations");
  analyze->add_option("--lambda", analyze_lambda, "coupling used with --config");
  analyze->add_option("--top", top_k, "number of pairs and populations shown");

  csvent::CheckpointOptions checkpoint_options;
  auto* checkpoints = app.add_subcommand("checkpoints", "run the reference-value regression");
  checkpoints->add_option("--delta", checkpoint_options.splitting,
                          "splitting for the parameterized JCM checks");
  checkpoints->add_option("--n_max", checkpoint_options.n_max, "boson cutoff");
  checkpoints->add_option("--redfield-n_max", checkpoint_options.redfield_n_max,
                          "boson cutoff for the Redfield check");
  bool skip_redfield = false;
  checkpoints->add_flag("--skip-redfield", skip_redfield, "omit the Redfield NESS check");

  std::string dump_config;
  double dump_lambda = 0.0;
  std::string dump_out;
  Overrides dump_overrides;
  auto* dump = app.add_subcommand("dump", "write the density operator at one coupling");
  dump->add_option("--config", dump_config, "key = value config file")->required();
  dump->add_option("--lambda", dump_lambda, "coupling")->required();
  dump->add_option("--out", dump_out, "output file")->required();
  add_overrides(dump, dump_overrides);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*sweep) {
      csvent::SweepConfig config = resolve_config(config_path, sweep_overrides);
      if (!out_path.empty()) config.out = out_path;
      if (!plot_path.empty()) config.plot = plot_path;
      const auto rows = csvent::run_sweep(config);
      if (config.out.empty() || config.out == "-") {
        csvent::write_csv(std::cout, rows);
      } else {
        auto out = open_output(config.out);
        csvent::write_csv(out, rows);
      }
      if (!config.plot.empty()) {
        auto out = open_output(config.plot);
        csvent::write_plot_svg(out, rows,
                               csvent::to_string(config.model) + " " +
                                   csvent::to_string(config.state_kind));
      }
      int failed = 0;
      for (const auto& row : rows) failed += !row.error.empty();
      if (failed > 0) {
        std::cerr << failed << " of " << rows.size() << " sweep points failed\n";
      }
      return kOk;
    }
    if (*analyze) {
      const csvent::DensityFile file = csvent::read_density(density_path);
      const csvent::ValidationReport report =
          csvent::validate_density(file.matrix, file.dims);
      if (!report.ok()) {
        std::cerr << report.describe() << '\n';
        return kInputError;
      }
      const csvent::DensityOperator rho(file.matrix, file.dims);
      std::optional<csvent::HermitianOperator> h;
      if (!analyze_config.empty()) {
        if (!analyze_lambda) throw csvent::ParameterError("--config needs --lambda");
        h = csvent::build_hamiltonian(resolve_config(analyze_config, {}), *analyze_lambda);
      }
      const auto result = csvent::analyze_density(rho, h ? &*h : nullptr);
      csvent::print_report(std::cout, result, rho.dims(), top_k);
      return kOk;
    }
    if (*checkpoints) {
      checkpoint_options.include_redfield = !skip_redfield;
      const auto results = csvent::run_checkpoints(checkpoint_options, &std::cerr);
      csvent::print_checkpoints(std::cout, results);
      for (const auto& c : results) {
        if (!c.passed) return kCheckpointFailure;
      }
      return kOk;
    }
    if (*dump) {
      const csvent::SweepConfig config = resolve_config(dump_config, dump_overrides);
      const csvent::DensityOperator rho = csvent::build_state(config, dump_lambda);
      auto out = open_output(dump_out);
      csvent::write_density(out, rho.matrix(), rho.dims());
      return kOk;
    }
  } catch (const csvent::SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const csvent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
