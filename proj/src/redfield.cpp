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

#include "csvent/redfield.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace csvent {

double OhmicSpectralDensity::operator()(double omega) const {
  return omega * std::exp(-omega / cutoff);
}

BathSpec::BathSpec(HermitianOperator coupling_operator_,
                   OhmicSpectralDensity spectral_density_, double beta_,
                   double gamma_)
    : coupling_operator(std::move(coupling_operator_)),
      spectral_density(spectral_density_),
      beta(beta_),
      gamma(gamma_) {
  if (!(spectral_density.cutoff > 0.0)) {
    throw ParameterError("spectral density cutoff must be positive");
  }
  if (!(gamma >= 0.0)) {
    throw ParameterError("bath coupling prefactor must be nonnegative");
  }
  if (!(beta > 0.0)) {
    throw ParameterError("bath inverse temperature must be positive");
  }
}

EigenbasisContext EigenbasisContext::from(const HermitianOperator& h) {
  const Eigensystem es = hermitian_eigensystem(h);
  EigenbasisContext ctx;
  ctx.energies = es.values;
  ctx.transform = es.vectors;
  ctx.dims = h.dims();
  const int d = h.dim();
  ctx.gaps.resize(d, d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) ctx.gaps(m, n) = ctx.energies(m) - ctx.energies(n);
  }
  return ctx;
}

Matrix EigenbasisContext::to_eigenbasis(const Matrix& op) const {
  return transform.adjoint() * op * transform;
}

Matrix EigenbasisContext::to_product(const Matrix& op) const {
  return transform * op * transform.adjoint();
}

double half_fourier_rate(const BathSpec& bath, double omega, double tol_gap) {
  if (std::abs(omega) <= tol_gap) return 0.0;
  const double w = std::abs(omega);
  const double x = bath.beta * w;
  const double j = bath.spectral_density(w);
  if (omega > 0.0) {
    // absorption: n_B(w) = 1 / (e^{beta w} - 1)
    return M_PI * j / std::expm1(x);
  }
  // emission: n_B(w) + 1 = 1 / (1 - e^{-beta w})
  return M_PI * j / -std::expm1(-x);
}

GammaTensor::GammaTensor(int dim)
    : dim_(dim),
      data_(static_cast<std::size_t>(dim) * dim * dim * dim, Complex(0.0, 0.0)) {}

namespace {

// gamma_j * T_j in the energy eigenbasis.
Matrix scaled_coupling(const EigenbasisContext& ctx, const BathSpec& bath) {
  if (!(bath.coupling_operator.dims() == ctx.dims)) {
    throw ShapeError("bath coupling operator does not match the system");
  }
  return bath.gamma * ctx.to_eigenbasis(bath.coupling_operator.matrix());
}

Matrix rate_table(const EigenbasisContext& ctx, const BathSpec& bath) {
  const int d = ctx.dim();
  Matrix k(d, d);
  for (int o = 0; o < d; ++o) {
    for (int p = 0; p < d; ++p) k(o, p) = half_fourier_rate(bath, ctx.gaps(o, p));
  }
  return k;
}

}  // namespace

GammaTensor gamma_tensor(const EigenbasisContext& ctx,
                         std::span<const BathSpec> baths) {
  const int d = ctx.dim();
  GammaTensor g(d);
  for (const BathSpec& bath : baths) {
    const Matrix t = scaled_coupling(ctx, bath);
    const Matrix k = rate_table(ctx, bath);
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        if (t(m, n) == Complex(0.0, 0.0)) continue;
        for (int o = 0; o < d; ++o) {
          for (int p = 0; p < d; ++p) g(m, n, o, p) += t(m, n) * t(o, p) * k(o, p);
        }
      }
    }
  }
  return g;
}

Matrix redfield_tensor(const GammaTensor& g) {
  const int d = g.dim();
  // contraction(m, o) = sum_q G_{mq,qo}
  Matrix contraction = Matrix::Zero(d, d);
  for (int m = 0; m < d; ++m) {
    for (int o = 0; o < d; ++o) {
      for (int q = 0; q < d; ++q) contraction(m, o) += g(m, q, q, o);
    }
  }
  Matrix r = Matrix::Zero(d * d, d * d);
  for (int o = 0; o < d; ++o) {
    for (int p = 0; p < d; ++p) {
      const int col = o * d + p;
      for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
          Complex v = g(p, n, m, o) + std::conj(g(o, m, n, p));
          if (n == p) v -= contraction(m, o);
          if (m == o) v -= std::conj(contraction(n, p));
          r(m * d + n, col) = v;
        }
      }
    }
  }
  return r;
}

Vector vectorize(const Matrix& rho) {
  const Eigen::Index d = rho.rows();
  Vector v(d * d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = 0; n < d; ++n) v(m * d + n) = rho(m, n);
  }
  return v;
}

Matrix unvectorize(const Vector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw ShapeError("vector length does not match dim^2");
  }
  Matrix rho(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) rho(m, n) = v(m * dim + n);
  }
  return rho;
}

Matrix Liouvillian::apply(const Matrix& rho_eigen) const {
  return unvectorize(superoperator * vectorize(rho_eigen), context.dim());
}

Liouvillian build_liouvillian(const HermitianOperator& h,
                              std::span<const BathSpec> baths) {
  Liouvillian l;
  l.context = EigenbasisContext::from(h);
  const int d = l.context.dim();
  l.superoperator = Matrix::Zero(d * d, d * d);
  Matrix& s = l.superoperator;

  // Gamma_{mn,op} = T_mn A_op with A_op = T_op rate(w_op), so every term of R
  // factors into two-index tables and no rank-4 array is formed.
  for (const BathSpec& bath : baths) {
    const Matrix t = scaled_coupling(l.context, bath);
    const Matrix a = t.cwiseProduct(rate_table(l.context, bath));
    const Matrix ta = t * a;  // sum_q Gamma_{mq,qo}
    const Matrix t_conj = t.conjugate();
    const Matrix a_conj = a.conjugate();
    for (int o = 0; o < d; ++o) {
      for (int p = 0; p < d; ++p) {
        const int col = o * d + p;
        for (int m = 0; m < d; ++m) {
          const Complex a_mo = a(m, o);
          const Complex tc_om = t_conj(o, m);
          for (int n = 0; n < d; ++n) {
            s(m * d + n, col) += t(p, n) * a_mo + tc_om * a_conj(n, p);
          }
          s(m * d + p, col) -= ta(m, o);
        }
        for (int n = 0; n < d; ++n) s(o * d + n, col) -= std::conj(ta(n, p));
      }
    }
  }
  l.dissipator_scale = max_abs(s);

  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      s(m * d + n, m * d + n) += Complex(0.0, -l.context.gaps(m, n));
    }
  }
  return l;
}

namespace {

struct NullEstimate {
  Vector vector;  // unit 2-norm
  double sigma_min = 0.0;
  double sigma_second = 0.0;
};

NullEstimate null_by_svd(const Matrix& s) {
  Eigen::BDCSVD<Matrix> svd(s, Eigen::ComputeFullV);
  const Eigen::Index n = s.cols();
  NullEstimate est;
  est.vector = svd.matrixV().col(n - 1);
  est.sigma_min = svd.singularValues()(n - 1);
  est.sigma_second = n > 1 ? svd.singularValues()(n - 2) : 0.0;
  return est;
}

// Block inverse iteration on L - mu I, then the singular values of L restricted
// to the converged subspace. They bound the smallest singular values of L from
// above, so a small second value certifies a degenerate kernel.
NullEstimate null_by_inverse_iteration(const Matrix& s, double shift,
                                       const SteadyStateOptions& opt) {
  const Eigen::Index n = s.rows();
  const Eigen::Index k = std::min<Eigen::Index>(opt.block_size, n);
  const Matrix shifted = s - Complex(shift, 0.0) * Matrix::Identity(n, n);
  Eigen::PartialPivLU<Matrix> lu(shifted);

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  Matrix block(n, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) block(i, j) = Complex(normal(rng), normal(rng));
  }
  const Matrix thin = Matrix::Identity(n, k);
  for (int it = 0; it < opt.iterations; ++it) {
    Matrix next = lu.solve(block);
    if (!next.allFinite()) {
      throw ConvergenceError("shifted solve produced non-finite values");
    }
    Eigen::HouseholderQR<Matrix> qr(next);
    block = qr.householderQ() * thin;
  }
  Eigen::JacobiSVD<Matrix> svd(s * block, Eigen::ComputeThinV);
  NullEstimate est;
  est.vector = block * svd.matrixV().col(k - 1);
  est.vector.normalize();
  est.sigma_min = svd.singularValues()(k - 1);
  est.sigma_second = k > 1 ? svd.singularValues()(k - 2) : 0.0;
  return est;
}

}  // namespace

SteadyState redfield_steady_state(const Liouvillian& l,
                                  const SteadyStateOptions& options) {
  const int d = l.context.dim();
  const Matrix& s = l.superoperator;
  if (l.dissipator_scale == 0.0) {
    throw DegenerateSteadyStateError(
        "generator has no dissipative part; every energy population is "
        "conserved and the kernel is at least " + std::to_string(d) +
        "-dimensional");
  }
  const double scale = max_abs(s);
  const NullEstimate est =
      s.rows() <= options.dense_svd_limit
          ? null_by_svd(s)
          : null_by_inverse_iteration(s, 1e-6 * l.dissipator_scale, options);

  if (est.sigma_second <= options.degeneracy_tol * l.dissipator_scale) {
    std::ostringstream os;
    os << "steady state is not unique: second-smallest singular value "
       << est.sigma_second << " vs dissipation scale " << l.dissipator_scale
       << " (conserved sector populations? use the sector steady state)";
    throw DegenerateSteadyStateError(os.str());
  }
  const double residual = (s * est.vector).norm();
  if (residual > options.residual_tol * scale) {
    std::ostringstream os;
    os << "no kernel vector meets the residual bound: |L x| = " << residual
       << " > " << options.residual_tol * scale;
    throw ConvergenceError(os.str());
  }

  Matrix rho = unvectorize(est.vector, d);
  const Complex tr = rho.trace();
  if (std::abs(tr) == 0.0) {
    throw ConvergenceError("kernel vector has zero trace");
  }
  rho /= tr;
  const double raw_defect = hermiticity_defect(rho);
  rho = 0.5 * (rho + rho.adjoint());
  rho /= rho.trace().real();
  Matrix product = l.context.to_product(rho);
  product = 0.5 * (product + product.adjoint());
  product /= product.trace().real();
  return SteadyState{DensityOperator(std::move(product), l.context.dims),
                     residual, est.sigma_second, raw_defect};
}

}  // namespace csvent
