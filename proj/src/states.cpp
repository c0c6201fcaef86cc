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

#include "csvent/states.hpp"

#include <cmath>
#include <sstream>

namespace csvent {

namespace {

// Normalized Gibbs state of h (given in some basis) at inverse temperature beta.
Matrix gibbs_matrix(const Matrix& h, double beta) {
  const Eigensystem es = hermitian_eigensystem(h);
  const double e0 = es.values(0);
  RealVector weights(es.values.size());
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    weights(k) = std::exp(-beta * (es.values(k) - e0));
  }
  weights /= weights.sum();
  Matrix rho = es.vectors * weights.asDiagonal() * es.vectors.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return rho;
}

// Orthonormal basis (columns) of the range of a projector.
Matrix projector_range(const Matrix& p) {
  const Eigen::Index n = p.rows();
  const Matrix off = p - Matrix(p.diagonal().asDiagonal());
  if (max_abs(off) == 0.0) {
    int count = 0;
    for (Eigen::Index i = 0; i < n; ++i) count += p(i, i).real() > 0.5;
    Matrix q = Matrix::Zero(n, count);
    int col = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (p(i, i).real() > 0.5) q(i, col++) = 1.0;
    }
    return q;
  }
  const Eigensystem es = hermitian_eigensystem(p);
  int count = 0;
  for (Eigen::Index k = 0; k < n; ++k) count += es.values(k) > 0.5;
  return es.vectors.rightCols(count);
}

void require_projector(const Matrix& p, const char* name) {
  const double tol = Tolerances{}.hermiticity;
  if (max_abs(p * p - p) > tol) {
    throw ContractError(std::string(name) + " is not idempotent");
  }
}

}  // namespace

DensityOperator thermal_state(const HermitianOperator& h, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw ParameterError("thermal state requires finite beta > 0");
  }
  return DensityOperator(gibbs_matrix(h.matrix(), beta), h.dims());
}

DensityOperator sector_steady_state(const HermitianOperator& h,
                                    const HermitianOperator& p_even,
                                    const HermitianOperator& p_odd,
                                    const SectorParams& sector) {
  const Tolerances tol;
  if (sector.p_even < 0.0 || sector.p_odd < 0.0 ||
      std::abs(sector.p_even + sector.p_odd - 1.0) > tol.trace) {
    throw ParameterError("sector populations must be nonnegative and sum to 1");
  }
  if (!(sector.beta_even > 0.0) || !(sector.beta_odd > 0.0)) {
    throw ParameterError("sector inverse temperatures must be positive");
  }
  if (!(h.dims() == p_even.dims()) || !(h.dims() == p_odd.dims())) {
    throw ShapeError("Hamiltonian and projectors act on different spaces");
  }
  require_projector(p_even.matrix(), "P_e");
  require_projector(p_odd.matrix(), "P_o");
  const Eigen::Index n = h.dim();
  if (max_abs(p_even.matrix() + p_odd.matrix() - Matrix::Identity(n, n)) >
      tol.hermiticity) {
    throw ContractError("P_e + P_o must equal the identity");
  }
  const double defect = max_abs(commutator(h.matrix(), p_even.matrix()));
  if (defect > tol.hermiticity * std::max(1.0, max_abs(h.matrix()))) {
    std::ostringstream os;
    os << "Hamiltonian does not commute with the sector projectors (|[H, P_e]| = "
       << defect << ")";
    throw SymmetryError(os.str());
  }

  Matrix rho = Matrix::Zero(n, n);
  const auto add_sector = [&](const Matrix& p, double weight, double beta) {
    if (weight == 0.0) return;
    const Matrix q = projector_range(p);
    if (q.cols() == 0) {
      throw ParameterError("nonzero population assigned to an empty sector");
    }
    const Matrix block = q.adjoint() * h.matrix() * q;
    rho += weight * q * gibbs_matrix(block, beta) * q.adjoint();
  };
  add_sector(p_even.matrix(), sector.p_even, sector.beta_even);
  add_sector(p_odd.matrix(), sector.p_odd, sector.beta_odd);
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  return DensityOperator(std::move(rho), h.dims());
}

}  // namespace csvent
