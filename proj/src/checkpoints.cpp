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

#include "csvent/checkpoints.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "csvent/entanglement.hpp"
#include "csvent/models.hpp"
#include "csvent/redfield.hpp"
#include "csvent/states.hpp"
#include "csvent/sweep.hpp"

namespace csvent {

namespace {

constexpr double kReferenceSplitting = 2.0;
constexpr double kReferenceBeta = 90.0;
// Population of the top boson level above which results are flagged as
// truncation-limited.
constexpr double kTruncationWarning = 1e-8;

Checkpoint make(std::string name, double expected, double actual,
                double tolerance, Comparison cmp, std::string note = {}) {
  Checkpoint c{std::move(name), expected, actual, tolerance, cmp, false,
               std::move(note)};
  switch (cmp) {
    case Comparison::Absolute:
      c.passed = std::abs(actual - expected) <= tolerance;
      break;
    case Comparison::Relative:
      c.passed = std::abs(actual - expected) <= tolerance * std::abs(expected);
      break;
    case Comparison::AtMost:
      c.passed = actual <= expected;
      break;
    case Comparison::AtLeast:
      c.passed = actual >= expected;
      break;
  }
  if (!std::isfinite(actual)) c.passed = false;
  return c;
}

double top_level_population(const DensityOperator& rho) {
  const BipartiteDims& dims = rho.dims();
  double pop = 0.0;
  for (int s = 0; s < dims.d_a(); ++s) {
    const int i = dims.index(s, dims.d_b() - 1);
    pop += rho.matrix()(i, i).real();
  }
  return pop;
}

DensityOperator qrm_thermal(double lambda, int n_max, double bias = 0.0) {
  ModelParams p{kReferenceSplitting, lambda, bias, n_max};
  return thermal_state(bias == 0.0 ? build_qrm(p) : build_qrm_eps(p), kReferenceBeta);
}

double peak_negativity(double bias, int n_max) {
  double peak = 0.0;
  for (int i = 0; i <= 70; ++i) {
    peak = std::max(peak, negativity(qrm_thermal(0.05 * i, n_max, bias)));
  }
  return peak;
}

}  // namespace

std::vector<Checkpoint> run_checkpoints(const CheckpointOptions& opt,
                                        std::ostream* warnings) {
  std::vector<Checkpoint> out;
  const auto warn_truncation = [&](const std::string& what,
                                   const DensityOperator& rho) {
    const double pop = top_level_population(rho);
    if (warnings != nullptr && pop > kTruncationWarning) {
      *warnings << "warning: " << what << ": population " << pop
                << " in the top boson level n = " << rho.dims().d_b() - 1
                << "; increase n_max\n";
    }
  };

  // QRM thermal density operators at Delta = 2, beta = 90.
  struct Reference {
    double lambda, S, N;
  };
  for (const Reference ref : {Reference{0.3, 0.0102, 0.101},
                              Reference{1.3, 0.207, 0.454},
                              Reference{2.3, 0.00334, 0.0122}}) {
    const DensityOperator rho = qrm_thermal(ref.lambda, opt.n_max);
    std::ostringstream tag;
    tag << "qrm.thermal lambda=" << ref.lambda;
    warn_truncation(tag.str(), rho);
    out.push_back(make(tag.str() + " S", ref.S, csv_S(rho).S, 0.02,
                       Comparison::Relative));
    out.push_back(make(tag.str() + " N", ref.N, negativity(rho), 0.02,
                       Comparison::Relative));
  }

  // QRM entanglement rises then falls with coupling.
  {
    const double peak = peak_negativity(0.0, opt.n_max);
    const double tail = negativity(qrm_thermal(3.5, opt.n_max));
    out.push_back(make("qrm.nonmonotone N(3.5)/peak", 0.5, tail / peak, 0.0,
                       Comparison::AtMost));
    const double eps_peak = peak_negativity(0.1 * kReferenceSplitting, opt.n_max);
    out.push_back(make("qrm_eps.peak_halved eps=0.1*Delta", 0.5,
                       eps_peak / peak, 0.1, Comparison::Absolute));
  }

  // JCM closed forms, parameterized by the requested splitting.
  const double delta = opt.splitting;
  out.push_back(make("jcm.lambda_0 = sqrt(Delta)", std::sqrt(delta),
                     critical_coupling(0, delta), 1e-12, Comparison::Absolute));
  {
    ModelParams p{delta, 1.0, 0.0, opt.n_max};
    out.push_back(make("jcm.E_00 = -Delta/2", -0.5 * delta,
                       jcm_eigensystem(p, 0).front().energy, 1e-12,
                       Comparison::Absolute));
  }
  {
    const double lambda = 0.5 * critical_coupling(0, delta);
    const DensityOperator rho =
        thermal_state(build_jcm({delta, lambda, 0.0, opt.n_max}), kReferenceBeta);
    out.push_back(make("jcm.below_lambda_0 N", 0.0, negativity(rho), 1e-6,
                       Comparison::Absolute));
    out.push_back(make("jcm.below_lambda_0 S", 0.0, csv_S(rho).S, 1e-6,
                       Comparison::Absolute));
  }
  out.push_back(make("jcm.strong_coupling S -> 1/4", 0.25,
                     jcm_thermal_S_analytic(delta, 100.0), 1e-4,
                     Comparison::Absolute));
  out.push_back(make("jcm.strong_coupling N -> 1/2", 0.5,
                     jcm_thermal_N_analytic(delta, 100.0), 1e-4,
                     Comparison::Absolute));
  for (int n = 1; n <= 2; ++n) {
    const double lambda =
        0.5 * (critical_coupling(n - 1, delta) + critical_coupling(n, delta));
    const DensityOperator rho =
        thermal_state(build_jcm({delta, lambda, 0.0, opt.n_max}), kReferenceBeta);
    std::ostringstream tag;
    tag << std::setprecision(4) << "jcm.analytic_vs_thermal lambda=" << lambda;
    out.push_back(make(tag.str() + " S", jcm_thermal_S_analytic(delta, lambda),
                       csv_S(rho).S, 1e-3, Comparison::Absolute));
    out.push_back(make(tag.str() + " N", jcm_thermal_N_analytic(delta, lambda),
                       negativity(rho), 1e-3, Comparison::Absolute));
  }
  {
    // Dip at the first critical coupling above lambda_0.
    const double l1 = critical_coupling(1, delta);
    const auto n_at = [&](double lambda) {
      return negativity(
          thermal_state(build_jcm({delta, lambda, 0.0, opt.n_max}), kReferenceBeta));
    };
    out.push_back(make("jcm.dip_at_lambda_1 N(l1)/N(l1+0.15)", 0.8,
                       n_at(l1) / n_at(l1 + 0.15), 0.0, Comparison::AtMost));
  }

  // Bath rate vanishes at zero gap.
  {
    const BathSpec bath(HermitianOperator(Matrix::Identity(2, 2), BipartiteDims(2, 1)),
                        OhmicSpectralDensity{kReferenceSplitting}, kReferenceBeta, 1.0);
    out.push_back(make("redfield.rate(omega=0)", 0.0, half_fourier_rate(bath, 0.0),
                       0.0, Comparison::Absolute));
  }

  // Symmetry-respecting baths at strong coupling.
  SweepConfig sector;
  sector.model = ModelKind::Qrm;
  sector.state_kind = StateKind::Sector;
  sector.delta = kReferenceSplitting;
  sector.n_max = opt.n_max;
  sector.p_e = 2.0 / 3.0;
  sector.p_o = 1.0 / 3.0;
  sector.beta_e = sector.beta_o = kReferenceBeta;
  out.push_back(make("sector.p_e=2/3 N(lambda=2.5) stays large", 0.1,
                     negativity(build_state(sector, 2.5)), 0.0,
                     Comparison::AtLeast));
  sector.p_e = sector.p_o = 0.5;
  sector.beta_o = 1.0;
  const double hot_odd = negativity(build_state(sector, 2.5));
  out.push_back(make("sector.beta_o=1 N(lambda=2.5) stays large", 0.1, hot_odd,
                     0.0, Comparison::AtLeast));

  if (opt.include_redfield) {
    SweepConfig ness = sector;
    ness.model = ModelKind::QrmEps;
    ness.state_kind = StateKind::Redfield;
    ness.epsilon = 0.1 * kReferenceSplitting;
    ness.n_max = opt.redfield_n_max;
    ness.gamma_e = ness.gamma_o = 1e-5;
    const DensityOperator rho = build_state(ness, 2.5);
    warn_truncation("redfield NESS", rho);
    out.push_back(make("redfield.eps NESS N(2.5)/sector N(2.5)", 0.5,
                       negativity(rho) / hot_odd, 0.0, Comparison::AtMost));
  }
  return out;
}

void print_checkpoints(std::ostream& out,
                       const std::vector<Checkpoint>& results) {
  int failed = 0;
  out << std::setprecision(6);
  for (const Checkpoint& c : results) {
    failed += !c.passed;
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": actual "
        << c.actual;
    switch (c.comparison) {
      case Comparison::Absolute:
        out << ", expected " << c.expected << " +- " << c.tolerance
            << " (delta " << std::abs(c.actual - c.expected) << ")";
        break;
      case Comparison::Relative:
        out << ", expected " << c.expected << " +- " << 100 * c.tolerance
            << "% (delta " << 100 * std::abs(c.actual - c.expected) / std::abs(c.expected)
            << "%)";
        break;
      case Comparison::AtMost:
        out << ", bound <= " << c.expected;
        break;
      case Comparison::AtLeast:
        out << ", bound >= " << c.expected;
        break;
    }
    if (!c.note.empty()) out << " [" << c.note << "]";
    out << '\n';
  }
  out << results.size() - failed << "/" << results.size()
      << " checkpoints passed\n";
}

}  // namespace csvent
