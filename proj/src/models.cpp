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

#include "csvent/models.hpp"

#include <cmath>

namespace csvent {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Spin operators in the (down, up) ordering.
Matrix sigma_z() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = -1.0;
  m(1, 1) = 1.0;
  return m;
}

Matrix sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

// |up><down|
Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

Matrix annihilation(int d_b) {
  Matrix a = Matrix::Zero(d_b, d_b);
  for (int n = 1; n < d_b; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Matrix number(int d_b) {
  Matrix m = Matrix::Zero(d_b, d_b);
  for (int n = 0; n < d_b; ++n) m(n, n) = static_cast<double>(n);
  return m;
}

void require_spin_boson(const BipartiteDims& dims) {
  if (dims.d_a() != 2) {
    throw ParameterError("spin-boson operators need d_A = 2");
  }
}

void require_params(const ModelParams& p) {
  if (p.n_max < 1) {
    throw ParameterError("boson cutoff n_max must be >= 1, got " +
                         std::to_string(p.n_max));
  }
  if (!std::isfinite(p.splitting) || !std::isfinite(p.coupling) ||
      !std::isfinite(p.bias)) {
    throw ParameterError("model parameters must be finite");
  }
}

// Terms shared by every model: (Delta/2) sigma_z + a^dag a.
Matrix bare_hamiltonian(const ModelParams& p) {
  const int db = p.n_max + 1;
  return 0.5 * p.splitting * kron(sigma_z(), Matrix::Identity(db, db)) +
         kron(Matrix::Identity(2, 2), number(db));
}

Matrix rabi_interaction(int d_b) {
  const Matrix a = annihilation(d_b);
  return kron(sigma_x(), a + a.adjoint());
}

}  // namespace

BipartiteDims spin_boson_dims(int n_max) {
  if (n_max < 1) {
    throw ParameterError("boson cutoff n_max must be >= 1");
  }
  return BipartiteDims(2, n_max + 1);
}

BipartiteDims ModelParams::dims() const { return spin_boson_dims(n_max); }

HermitianOperator build_qrm(const ModelParams& params) {
  require_params(params);
  const BipartiteDims dims = params.dims();
  Matrix h = bare_hamiltonian(params) +
             params.coupling * rabi_interaction(dims.d_b());
  return HermitianOperator(std::move(h), dims);
}

HermitianOperator build_jcm(const ModelParams& params) {
  require_params(params);
  const BipartiteDims dims = params.dims();
  const Matrix a = annihilation(dims.d_b());
  const Matrix sp = sigma_plus();
  Matrix h = bare_hamiltonian(params) +
             params.coupling * (kron(sp.adjoint(), a.adjoint()) + kron(sp, a));
  return HermitianOperator(std::move(h), dims);
}

HermitianOperator build_qrm_eps(const ModelParams& params) {
  require_params(params);
  const BipartiteDims dims = params.dims();
  Matrix h = bare_hamiltonian(params) +
             params.coupling * rabi_interaction(dims.d_b()) +
             params.bias * kron(sigma_x(), Matrix::Identity(dims.d_b(), dims.d_b()));
  return HermitianOperator(std::move(h), dims);
}

HermitianOperator counterrotating_term(const BipartiteDims& dims) {
  require_spin_boson(dims);
  const Matrix a = annihilation(dims.d_b());
  const Matrix sp = sigma_plus();
  return HermitianOperator(kron(sp, a.adjoint()) + kron(sp.adjoint(), a), dims);
}

HermitianOperator bath_coupling_operator(const BipartiteDims& dims) {
  require_spin_boson(dims);
  return HermitianOperator(rabi_interaction(dims.d_b()), dims);
}

HermitianOperator excitation_number(const BipartiteDims& dims) {
  require_spin_boson(dims);
  Matrix m = Matrix::Zero(dims.total(), dims.total());
  for (int s = 0; s < 2; ++s) {
    for (int n = 0; n < dims.d_b(); ++n) {
      const int i = dims.index(s, n);
      m(i, i) = static_cast<double>(s + n);
    }
  }
  return HermitianOperator(std::move(m), dims);
}

HermitianOperator parity(const BipartiteDims& dims) {
  require_spin_boson(dims);
  Matrix m = Matrix::Zero(dims.total(), dims.total());
  for (int s = 0; s < 2; ++s) {
    const double sz = s == 1 ? 1.0 : -1.0;
    for (int n = 0; n < dims.d_b(); ++n) {
      const int i = dims.index(s, n);
      m(i, i) = -sz * (n % 2 == 0 ? 1.0 : -1.0);
    }
  }
  return HermitianOperator(std::move(m), dims);
}

ParityProjectors parity_projectors(const BipartiteDims& dims) {
  const Matrix p = parity(dims).matrix();
  const Matrix id = Matrix::Identity(dims.total(), dims.total());
  return {HermitianOperator(0.5 * (id + p), dims),
          HermitianOperator(0.5 * (id - p), dims)};
}

double critical_coupling(int n, double splitting) {
  if (n < 0) {
    throw ParameterError("critical coupling index must be >= 0");
  }
  if (!(splitting > 0.0)) {
    throw ParameterError("critical coupling requires Delta > 0");
  }
  if (n == 0) return std::sqrt(splitting);
  // E_{n,-} = E_{n+1,-}  <=>  Omega_n = lambda^2 - 1.
  const double m = 2.0 * n + 1.0;
  const double detuning = splitting - 1.0;
  return std::sqrt(m + std::sqrt(m * m - 1.0 + detuning * detuning));
}

std::vector<JcmEigenpair> jcm_eigensystem(const ModelParams& params, int n) {
  require_params(params);
  if (n < 0 || n > params.n_max) {
    throw TruncationError("excitation number " + std::to_string(n) +
                          " outside truncated space (n_max = " +
                          std::to_string(params.n_max) + ")");
  }
  const BipartiteDims dims = params.dims();
  if (n == 0) {
    JcmEigenpair ground;
    ground.energy = -0.5 * params.splitting;
    ground.state = Vector::Zero(dims.total());
    ground.state(dims.index(0, 0)) = 1.0;
    ground.rabi_frequency = std::abs(params.detuning());
    return {ground};
  }
  const double delta = params.detuning();
  const double root_n = std::sqrt(static_cast<double>(n));
  // atan2 keeps the upper state on the + branch for any sign of the detuning
  // and reaches pi/2 at resonance.
  const double theta = std::atan2(2.0 * params.coupling * root_n, delta);
  const double omega =
      std::sqrt(delta * delta + 4.0 * params.coupling * params.coupling * n);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const int up = dims.index(1, n - 1);
  const int down = dims.index(0, n);

  JcmEigenpair upper;
  upper.n = n;
  upper.branch = JcmBranch::Upper;
  upper.energy = (n - 0.5) + 0.5 * omega;
  upper.state = Vector::Zero(dims.total());
  upper.state(up) = c;
  upper.state(down) = s;
  upper.mixing_angle = theta;
  upper.rabi_frequency = omega;

  JcmEigenpair lower = upper;
  lower.branch = JcmBranch::Lower;
  lower.energy = (n - 0.5) - 0.5 * omega;
  lower.state(up) = -s;
  lower.state(down) = c;
  return {upper, lower};
}

JcmRegion jcm_region(double splitting, double coupling, double tol) {
  const double x = std::abs(coupling);
  for (int n = 0;; ++n) {
    const double crit = critical_coupling(n, splitting);
    if (std::abs(x - crit) <= tol) return {n, true};
    if (x < crit) return {n, false};
  }
}

namespace {

double mixing_angle(double splitting, double coupling, int n) {
  return std::atan2(2.0 * coupling * std::sqrt(static_cast<double>(n)),
                    splitting - 1.0);
}

// lambda^2 n / ((Delta - 1)^2 + 4 lambda^2 n), the single-sector violation.
double sector_violation(double splitting, double coupling, int n) {
  const double d = splitting - 1.0;
  const double l2n = coupling * coupling * n;
  const double denom = d * d + 4.0 * l2n;
  return denom == 0.0 ? 0.0 : l2n / denom;
}

}  // namespace

double jcm_thermal_S_analytic(double splitting, double coupling) {
  const JcmRegion region = jcm_region(splitting, coupling);
  const int n = region.n;
  if (!region.critical) return sector_violation(splitting, coupling, n);
  return 0.25 * (sector_violation(splitting, coupling, n) +
                 sector_violation(splitting, coupling, n + 1));
}

double jcm_thermal_N_analytic(double splitting, double coupling) {
  const JcmRegion region = jcm_region(splitting, coupling);
  const int n = region.n;
  if (!region.critical) {
    return std::sqrt(sector_violation(splitting, coupling, n));
  }
  const double t0 = mixing_angle(splitting, coupling, n);
  const double t1 = mixing_angle(splitting, coupling, n + 1);
  const double s1 = std::pow(std::sin(0.5 * t1), 2);
  const double c0 = std::pow(std::cos(0.5 * t0), 2);
  return 0.25 * (std::sqrt(s1 * s1 + std::pow(std::sin(t0), 2)) - s1 +
                 std::sqrt(c0 * c0 + std::pow(std::sin(t1), 2)) - c0);
}

}  // namespace csvent
