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

#ifndef CSVENT_REDFIELD_HPP
#define CSVENT_REDFIELD_HPP

#include <span>
#include <vector>

#include "csvent/operators.hpp"

namespace csvent {

inline constexpr double kGapTolerance = 1e-9;

/// J(omega) = omega exp(-omega / cutoff) for omega >= 0.
struct OhmicSpectralDensity {
  double cutoff = 2.0;

  double operator()(double omega) const;
};

/// One independent bosonic bath coupled through gamma * T.
struct BathSpec {
  BathSpec(HermitianOperator coupling_operator,
           OhmicSpectralDensity spectral_density, double beta, double gamma);

  HermitianOperator coupling_operator;  // T, without gamma
  OhmicSpectralDensity spectral_density;
  double beta;
  double gamma;
};

/// Energy eigenbasis of a system Hamiltonian.
struct EigenbasisContext {
  RealVector energies;    // ascending
  Matrix transform;       // columns are eigenvectors in the product basis
  Eigen::MatrixXd gaps;   // gaps(m, n) = E_m - E_n
  BipartiteDims dims{1, 1};

  static EigenbasisContext from(const HermitianOperator& h);

  int dim() const { return static_cast<int>(energies.size()); }
  Matrix to_eigenbasis(const Matrix& op) const;
  Matrix to_product(const Matrix& op) const;
};

/// pi J(w) n_B(w) for w > 0, pi J(|w|) (n_B(|w|) + 1) for w < 0, 0 within
/// tol_gap of zero; n_B uses the bath's own beta. gamma is not included.
double half_fourier_rate(const BathSpec& bath, double omega,
                         double tol_gap = kGapTolerance);

/// Dense rank-4 table Gamma_{mn,op} = sum_j T^j_mn T^j_op rate_j(w_op), with
/// T^j = gamma_j * (coupling operator in the energy eigenbasis).
class GammaTensor {
 public:
  explicit GammaTensor(int dim);

  int dim() const { return dim_; }
  Complex& operator()(int m, int n, int o, int p) { return data_[flat(m, n, o, p)]; }
  Complex operator()(int m, int n, int o, int p) const { return data_[flat(m, n, o, p)]; }

 private:
  std::size_t flat(int m, int n, int o, int p) const {
    const auto d = static_cast<std::size_t>(dim_);
    return ((static_cast<std::size_t>(m) * d + n) * d + o) * d + p;
  }

  int dim_;
  std::vector<Complex> data_;
};

GammaTensor gamma_tensor(const EigenbasisContext& ctx,
                         std::span<const BathSpec> baths);

/// Redfield relaxation tensor as a dim^2 x dim^2 superoperator:
/// R_{mn,op} = G_{pn,mo} + G*_{om,np} - d_np sum_q G_{mq,qo} - d_mo sum_q G*_{nq,qp}.
/// Row index m*dim + n, column index o*dim + p.
Matrix redfield_tensor(const GammaTensor& gamma);

/// Row-major vectorization: rho_mn sits at m*dim + n.
Vector vectorize(const Matrix& rho);
Matrix unvectorize(const Vector& v, int dim);

/// Redfield generator in the energy eigenbasis of H:
/// L[rho]_mn = -i w_mn rho_mn + sum_op R_mn,op rho_op.
struct Liouvillian {
  EigenbasisContext context;
  Matrix superoperator;
  double dissipator_scale = 0.0;  // largest |R_mn,op|

  Matrix apply(const Matrix& rho_eigen) const;
};

Liouvillian build_liouvillian(const HermitianOperator& h,
                              std::span<const BathSpec> baths);

struct SteadyStateOptions {
  double residual_tol = 1e-8;     // relative to max |L|
  double degeneracy_tol = 1e-4;   // second singular value relative to max |R|
  // Superoperator size up to which a full SVD is used. Off by default: with
  // rates ~gamma^2 far below the Bohr frequencies the SVD kernel vector is
  // only accurate to ~eps*max|L|/max|R|.
  int dense_svd_limit = 0;
  int iterations = 8;
  int block_size = 3;
};

struct SteadyState {
  DensityOperator rho;             // product basis
  double residual = 0.0;           // |L x| for the unit null vector x
  double second_singular_value = 0.0;
  double raw_hermiticity_defect = 0.0;  // before Hermitizing
};

/// Kernel of L, Hermitized and trace-normalized. Throws
/// DegenerateSteadyStateError when the kernel is not one-dimensional and
/// ConvergenceError when no vector meets the residual bound.
SteadyState redfield_steady_state(const Liouvillian& l,
                                  const SteadyStateOptions& options = {});

}  // namespace csvent

#endif  // CSVENT_REDFIELD_HPP
