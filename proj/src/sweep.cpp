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

#include "csvent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "csvent/models.hpp"
#include "csvent/states.hpp"

namespace csvent {

HermitianOperator build_hamiltonian(const SweepConfig& config, double lambda) {
  const ModelParams params = config.model_params(lambda);
  switch (config.model) {
    case ModelKind::Jcm: return build_jcm(params);
    case ModelKind::Qrm: return build_qrm(params);
    case ModelKind::QrmEps: return build_qrm_eps(params);
  }
  throw ParameterError("unknown model");
}

std::vector<BathSpec> build_baths(const SweepConfig& config,
                                  const BipartiteDims& dims) {
  const OhmicSpectralDensity j{config.cutoff()};
  const HermitianOperator t = bath_coupling_operator(dims);
  std::vector<BathSpec> baths;
  if (config.baths == BathLayout::Single) {
    baths.emplace_back(t, j, config.beta, config.gamma_e);
    return baths;
  }
  const ParityProjectors p = parity_projectors(dims);
  const auto project = [&](const HermitianOperator& proj) {
    return HermitianOperator(proj.matrix() * t.matrix() * proj.matrix(), dims);
  };
  baths.emplace_back(project(p.even), j, config.beta_e, config.gamma_e);
  baths.emplace_back(project(p.odd), j, config.beta_o, config.gamma_o);
  return baths;
}

DensityOperator build_state(const SweepConfig& config, double lambda) {
  const HermitianOperator h = build_hamiltonian(config, lambda);
  switch (config.state_kind) {
    case StateKind::Thermal:
      return thermal_state(h, config.beta);
    case StateKind::Sector: {
      const ParityProjectors p = parity_projectors(h.dims());
      return sector_steady_state(
          h, p.even, p.odd, {config.p_e, config.p_o, config.beta_e, config.beta_o});
    }
    case StateKind::Redfield: {
      const std::vector<BathSpec> baths = build_baths(config, h.dims());
      const Liouvillian l = build_liouvillian(h, baths);
      return redfield_steady_state(l).rho;
    }
  }
  throw ParameterError("unknown state kind");
}

namespace {

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

}  // namespace

SweepRow evaluate_point(const SweepConfig& config, double lambda) {
  SweepRow row;
  row.lambda = lambda;
  try {
    const DensityOperator rho = build_state(config, lambda);
    row.S = csv_S(rho).S;
    row.sqrt_S = std::sqrt(row.S);
    row.N = negativity(rho);
    row.trace_defect = rho.validation().trace_defect;
    row.min_eigenvalue = rho.validation().min_eigenvalue;
  } catch (const std::exception& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.S = row.sqrt_S = row.N = row.trace_defect = row.min_eigenvalue = nan;
    row.error = sanitize(e.what());
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config,
                                const std::vector<double>& grid, int threads) {
  std::vector<SweepRow> rows(grid.size());
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(grid.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = evaluate_point(config, grid[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) {
        rows[i] = evaluate_point(config, grid[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate_config(config);
  return run_sweep(config, config.lambda_grid(), config.threads);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
               bool header) {
  if (header) out << kCsvHeader << '\n';
  char buf[256];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,",
                  r.lambda, r.S, r.sqrt_S, r.N, r.trace_defect, r.min_eigenvalue);
    out << buf << r.error << '\n';
  }
}

std::string format_csv(const std::vector<SweepRow>& rows, bool header) {
  std::ostringstream os;
  write_csv(os, rows, header);
  return os.str();
}

void write_plot_svg(std::ostream& out, const std::vector<SweepRow>& rows,
                    const std::string& title) {
  constexpr double width = 640, height = 420, left = 60, right = 20, top = 40,
                   bottom = 50;
  double xmin = 0.0, xmax = 1.0, ymax = 0.0;
  if (!rows.empty()) {
    xmin = rows.front().lambda;
    xmax = rows.back().lambda;
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  for (const SweepRow& r : rows) {
    if (std::isfinite(r.sqrt_S)) ymax = std::max(ymax, r.sqrt_S);
    if (std::isfinite(r.N)) ymax = std::max(ymax, r.N);
  }
  ymax = ymax > 0.0 ? 1.1 * ymax : 1.0;
  const auto px = [&](double x) {
    return left + (x - xmin) / (xmax - xmin) * (width - left - right);
  };
  const auto py = [&](double y) {
    return height - bottom - y / ymax * (height - top - bottom);
  };
  const auto polyline = [&](auto value, const char* color, const char* dash) {
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\"" << dash << " points=\"";
    for (const SweepRow& r : rows) {
      const double y = value(r);
      if (!std::isfinite(y)) continue;
      out << px(r.lambda) << ',' << py(y) << ' ';
    }
    out << "\"/>\n";
  };

  out << std::setprecision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << py(0) << "\" x2=\""
      << width - right << "\" y2=\"" << py(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << py(0) << "\" x2=\"" << left
      << "\" y2=\"" << top << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = xmin + (xmax - xmin) * i / 5.0;
    const double y = ymax * i / 5.0;
    out << "<text x=\"" << px(x) << "\" y=\"" << height - bottom + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << x << "</text>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << py(y) + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << y << "</text>\n";
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"12\">lambda</text>\n";
  polyline([](const SweepRow& r) { return r.sqrt_S; }, "#1f77b4", "");
  polyline([](const SweepRow& r) { return r.N; }, "#d62728",
           " stroke-dasharray=\"6,4\"");
  out << "<text x=\"" << width - right - 110 << "\" y=\"" << top + 10
      << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#1f77b4\">"
      << "sqrt(S) solid</text>\n";
  out << "<text x=\"" << width - right - 110 << "\" y=\"" << top + 26
      << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#d62728\">"
      << "N dashed</text>\n";
  out << "</svg>\n";
}

AnalysisReport analyze_density(const DensityOperator& rho,
                               const HermitianOperator* hamiltonian) {
  AnalysisReport report;
  report.validation = rho.validation();
  report.csv = csv_S(rho);
  report.negativity = negativity(rho);
  const BipartiteDims& dims = rho.dims();
  if (dims.d_a() == 2) {
    const ParityProjectors p = parity_projectors(dims);
    report.p_even = (p.even.matrix() * rho.matrix()).trace().real();
    report.p_odd = (p.odd.matrix() * rho.matrix()).trace().real();
  }
  const Eigensystem es = hermitian_eigensystem(rho.matrix());
  report.spectrum = es.values.reverse();
  if (hamiltonian != nullptr) {
    if (!(hamiltonian->dims() == dims)) {
      throw ShapeError("Hamiltonian does not match the density operator");
    }
    const Eigensystem h = hermitian_eigensystem(*hamiltonian);
    const Matrix in_energy = h.vectors.adjoint() * rho.matrix() * h.vectors;
    report.energy_populations = in_energy.diagonal().real();
    report.energies = h.values;
  }
  return report;
}

std::string product_label(int index, const BipartiteDims& dims) {
  const auto [s, n] = dims.split(index);
  std::ostringstream os;
  if (dims.d_a() == 2) {
    os << '|' << (s == 1 ? "up" : "down") << ',' << n << '>';
  } else {
    os << '|' << s << ',' << n << '>';
  }
  return os.str();
}

void print_report(std::ostream& out, const AnalysisReport& r,
                  const BipartiteDims& dims, int top_k) {
  out << std::setprecision(6);
  out << "dims: " << dims.d_a() << " x " << dims.d_b() << '\n';
  out << "validation: " << r.validation.describe() << '\n';
  out << "S = " << r.csv.S << "  sqrt(S) = " << std::sqrt(r.csv.S)
      << "  N = " << r.negativity << '\n';
  out << "violating pairs: " << r.csv.violating_pairs.size() << '\n';
  const int shown =
      std::min<int>(top_k, static_cast<int>(r.csv.violating_pairs.size()));
  for (int i = 0; i < shown; ++i) {
    const ViolatingPair& v = r.csv.violating_pairs[i];
    out << "  " << product_label(v.row, dims) << " <-> "
        << product_label(v.col, dims) << "  violation " << v.magnitude << '\n';
  }
  if (r.p_even && r.p_odd) {
    out << "parity populations: p_e = " << *r.p_even << "  p_o = " << *r.p_odd
        << '\n';
  }
  const int show_pop = std::min<int>(top_k, static_cast<int>(r.spectrum.size()));
  out << "largest eigenvalues of rho:";
  for (int i = 0; i < show_pop; ++i) out << ' ' << r.spectrum(i);
  out << '\n';
  if (r.energy_populations && r.energies) {
    out << "energy eigenbasis populations (lowest " << show_pop << "):\n";
    for (int i = 0; i < show_pop; ++i) {
      out << "  E = " << (*r.energies)(i) << "  population "
          << (*r.energy_populations)(i) << '\n';
    }
  }
}

}  // namespace csvent
