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

#ifndef CSVENT_SWEEP_HPP
#define CSVENT_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csvent/config.hpp"
#include "csvent/entanglement.hpp"
#include "csvent/redfield.hpp"

namespace csvent {

HermitianOperator build_hamiltonian(const SweepConfig& config, double lambda);

/// Baths for the Redfield state kind, in the layout the config selects.
std::vector<BathSpec> build_baths(const SweepConfig& config,
                                  const BipartiteDims& dims);

/// Thermal, sector or Redfield steady state at one coupling.
DensityOperator build_state(const SweepConfig& config, double lambda);

struct SweepRow {
  double lambda = 0.0;
  double S = 0.0;
  double sqrt_S = 0.0;
  double N = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  std::string error;  // empty on success
};

/// Never throws for state-construction failures; they land in `error`.
SweepRow evaluate_point(const SweepConfig& config, double lambda);

/// Points are independent; with threads > 1 they are evaluated concurrently
/// and returned in grid order.
std::vector<SweepRow> run_sweep(const SweepConfig& config,
                                const std::vector<double>& grid, int threads);
std::vector<SweepRow> run_sweep(const SweepConfig& config);

inline constexpr const char* kCsvHeader =
    "lambda,S,sqrt_S,N,trace_defect,min_eigenvalue,error";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
               bool header = true);
std::string format_csv(const std::vector<SweepRow>& rows, bool header = true);

/// sqrt(S) solid, N dashed, against lambda.
void write_plot_svg(std::ostream& out, const std::vector<SweepRow>& rows,
                    const std::string& title);

struct AnalysisReport {
  ValidationReport validation;
  CsvReport csv;
  double negativity = 0.0;
  std::optional<double> p_even;  // spin-boson dims only
  std::optional<double> p_odd;
  RealVector spectrum;           // eigenvalues of rho, descending
  std::optional<RealVector> energy_populations;  // ascending energy order
  std::optional<RealVector> energies;
};

AnalysisReport analyze_density(const DensityOperator& rho,
                               const HermitianOperator* hamiltonian = nullptr);

/// |down,n> / |up,n> for spin-boson dims, |s,n> otherwise.
std::string product_label(int index, const BipartiteDims& dims);

void print_report(std::ostream& out, const AnalysisReport& report,
                  const BipartiteDims& dims, int top_k);

}  // namespace csvent

#endif  // CSVENT_SWEEP_HPP
