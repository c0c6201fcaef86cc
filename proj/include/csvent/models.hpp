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

#ifndef CSVENT_MODELS_HPP
#define CSVENT_MODELS_HPP

#include <vector>

#include "csvent/operators.hpp"

namespace csvent {

inline constexpr int kDefaultBosonCutoff = 45;
inline constexpr double kCriticalTolerance = 1e-9;

/// Spin-boson parameters in units of the boson frequency.
struct ModelParams {
  double splitting = 2.0;  // TLS splitting Delta
  double coupling = 0.0;   // lambda
  double bias = 0.0;       // epsilon, coefficient of sigma_x
  int n_max = kDefaultBosonCutoff;

  double detuning() const { return splitting - 1.0; }
  BipartiteDims dims() const;
};

/// TLS (x) truncated boson, dims (2, n_max + 1).
BipartiteDims spin_boson_dims(int n_max);

/// (Delta/2) sigma_z + a^dag a + lambda sigma_x (a + a^dag)
HermitianOperator build_qrm(const ModelParams& params);
/// (Delta/2) sigma_z + a^dag a + lambda (sigma^- a^dag + sigma^+ a)
HermitianOperator build_jcm(const ModelParams& params);
/// QRM plus epsilon sigma_x.
HermitianOperator build_qrm_eps(const ModelParams& params);

/// Counterrotating part sigma^+ a^dag + sigma^- a (without lambda).
HermitianOperator counterrotating_term(const BipartiteDims& dims);

/// sigma_x (a + a^dag), the bath coupling operator.
HermitianOperator bath_coupling_operator(const BipartiteDims& dims);

/// (sigma_z + 1)/2 + a^dag a
HermitianOperator excitation_number(const BipartiteDims& dims);
/// -sigma_z (-1)^(a^dag a), diagonal with entries +-1.
HermitianOperator parity(const BipartiteDims& dims);

struct ParityProjectors {
  HermitianOperator even;
  HermitianOperator odd;
};
ParityProjectors parity_projectors(const BipartiteDims& dims);

/// JCM ground-state degeneracy ladder: lambda_0 = sqrt(Delta), and for n >= 1
/// lambda_n = sqrt(2n + 1 + sqrt((2n + 1)^2 + (Delta - 1)^2)).
double critical_coupling(int n, double splitting);

enum class JcmBranch { Ground, Upper, Lower };

struct JcmEigenpair {
  int n = 0;
  JcmBranch branch = JcmBranch::Ground;
  double energy = 0.0;
  Vector state;
  double mixing_angle = 0.0;    // theta_n
  double rabi_frequency = 0.0;  // Omega_n
};

/// Closed-form eigenpairs of the JCM in the excitation-n subspace: the single
/// |down,0> state for n = 0, else the upper and lower dressed states.
std::vector<JcmEigenpair> jcm_eigensystem(const ModelParams& params, int n);

/// Position of |lambda| on the critical ladder.
struct JcmRegion {
  int n = 0;              // lambda_{n-1} < |lambda| < lambda_n, or critical at lambda_n
  bool critical = false;  // |lambda| within kCriticalTolerance of lambda_n
};
JcmRegion jcm_region(double splitting, double coupling,
                     double tol = kCriticalTolerance);

/// Zero-temperature CSV and negativity of the JCM thermal state.
double jcm_thermal_S_analytic(double splitting, double coupling);
double jcm_thermal_N_analytic(double splitting, double coupling);

}  // namespace csvent

#endif  // CSVENT_MODELS_HPP
