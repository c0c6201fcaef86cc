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

#include <gtest/gtest.h>

#include <cmath>

#include "csvent/models.hpp"
#include "csvent/redfield.hpp"
#include "csvent/states.hpp"
#include "oracles.hpp"

namespace csvent {
namespace {

HermitianOperator sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return HermitianOperator(m, BipartiteDims(1, 2));
}

HermitianOperator two_level(double gap) {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 1) = gap;
  return HermitianOperator(m, BipartiteDims(1, 2));
}

std::vector<BathSpec> projected_baths(const ModelParams& p, double beta_e, double beta_o,
                                      double gamma) {
  const ParityProjectors pp = parity_projectors(p.dims());
  const Matrix t = bath_coupling_operator(p.dims()).matrix();
  const OhmicSpectralDensity j{p.splitting};
  return {BathSpec(HermitianOperator(pp.even.matrix() * t * pp.even.matrix(), p.dims()), j,
                   beta_e, gamma),
          BathSpec(HermitianOperator(pp.odd.matrix() * t * pp.odd.matrix(), p.dims()), j,
                   beta_o, gamma)};
}

TEST(Rate, Examples) {
  const BathSpec bath(sigma_x(), OhmicSpectralDensity{2.0}, 1.0, 1.0);
  EXPECT_EQ(half_fourier_rate(bath, 0.0), 0.0);
  EXPECT_EQ(half_fourier_rate(bath, 1e-12), 0.0);
  const double expected = M_PI * (2.0 / M_E) / (M_E * M_E - 1.0);
  EXPECT_NEAR(half_fourier_rate(bath, 2.0), expected, 1e-15);
  EXPECT_NEAR(half_fourier_rate(bath, 2.0), 0.3617834, 1e-7);
}

TEST(Rate, DetailedBalance) {
  for (double beta : {0.3, 1.0, 5.0, 90.0}) {
    const BathSpec bath(sigma_x(), OhmicSpectralDensity{2.0}, beta, 1.0);
    for (double w : {0.1, 0.7, 2.0, 3.3}) {
      const double up = half_fourier_rate(bath, w);
      const double down = half_fourier_rate(bath, -w);
      EXPECT_GT(down, 0.0);
      EXPECT_NEAR(up / down, std::exp(-beta * w), 1e-12 * std::exp(-beta * w) + 1e-300);
    }
  }
}

TEST(Bath, Validation) {
  EXPECT_THROW(BathSpec(sigma_x(), OhmicSpectralDensity{2.0}, -1.0, 1.0), ParameterError);
  EXPECT_THROW(BathSpec(sigma_x(), OhmicSpectralDensity{0.0}, 1.0, 1.0), ParameterError);
}

TEST(Gamma, TwoLevelEntries) {
  const double gap = 1.5, gamma = 0.1;
  const EigenbasisContext ctx = EigenbasisContext::from(two_level(gap));
  const std::vector<BathSpec> baths{BathSpec(sigma_x(), OhmicSpectralDensity{2.0}, 2.0, gamma)};
  const GammaTensor g = gamma_tensor(ctx, baths);
  // Only T_01 = T_10 = gamma survive.
  EXPECT_NEAR(g(0, 1, 1, 0).real(), gamma * gamma * half_fourier_rate(baths[0], gap), 1e-15);
  EXPECT_NEAR(g(1, 0, 0, 1).real(), gamma * gamma * half_fourier_rate(baths[0], -gap), 1e-15);
  EXPECT_EQ(g(0, 0, 0, 1), Complex(0.0));
  EXPECT_EQ(g(1, 1, 1, 0), Complex(0.0));
}

TEST(Gamma, ZeroCouplingAndShapeMismatch) {
  const ModelParams p{2.0, 0.4, 0.0, 4};
  const EigenbasisContext ctx = EigenbasisContext::from(build_qrm(p));
  const std::vector<BathSpec> zero{
      BathSpec(bath_coupling_operator(p.dims()), OhmicSpectralDensity{2.0}, 1.0, 0.0)};
  const Matrix r = redfield_tensor(gamma_tensor(ctx, zero));
  EXPECT_EQ(r.cwiseAbs().maxCoeff(), 0.0);
  const std::vector<BathSpec> wrong{BathSpec(sigma_x(), OhmicSpectralDensity{2.0}, 1.0, 1.0)};
  EXPECT_THROW(gamma_tensor(ctx, wrong), ShapeError);
}

TEST(Liouvillian, FactoredMatchesExplicitTensor) {
  ModelParams p{2.0, 0.9, 0.2, 4};
  const HermitianOperator h = build_qrm_eps(p);
  const std::vector<BathSpec> baths = projected_baths(p, 3.0, 0.7, 0.05);
  const Liouvillian l = build_liouvillian(h, baths);
  const Matrix r = redfield_tensor(gamma_tensor(l.context, baths));
  Matrix coherent = Matrix::Zero(r.rows(), r.cols());
  const int d = l.context.dim();
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      coherent(m * d + n, m * d + n) = Complex(0.0, -l.context.gaps(m, n));
    }
  }
  EXPECT_LT((l.superoperator - coherent - r).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(l.dissipator_scale, r.cwiseAbs().maxCoeff(), 1e-18);
}

TEST(Liouvillian, NoBathsIsUnitary) {
  const ModelParams p{2.0, 0.9, 0.0, 4};
  const HermitianOperator h = build_qrm(p);
  const Liouvillian l = build_liouvillian(h, {});
  std::mt19937_64 rng(2);
  const EigenbasisContext& ctx = l.context;
  const Matrix rho = oracle::random_density(h.dim(), 2, rng);
  const Matrix he = ctx.to_eigenbasis(h.matrix());
  const Matrix re = ctx.to_eigenbasis(rho);
  const Matrix expected = Complex(0.0, -1.0) * commutator(he, re);
  EXPECT_LT((l.apply(re) - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(l.dissipator_scale, 0.0);
  EXPECT_THROW(redfield_steady_state(l), DegenerateSteadyStateError);
}

TEST(Liouvillian, TraceAndHermiticityPreserved) {
  ModelParams p{2.0, 1.4, 0.2, 5};
  const Liouvillian l = build_liouvillian(build_qrm_eps(p), projected_baths(p, 90.0, 1.0, 0.1));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const Matrix x = oracle::random_hermitian(l.context.dim(), rng);
    const Matrix y = l.apply(x);
    EXPECT_LT(std::abs(y.trace()), 1e-12);
    EXPECT_LT((y - y.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Liouvillian, PopulationBlockIsPauliRateMatrix) {
  const double gap = 1.2, gamma = 0.03, beta = 1.7;
  const std::vector<BathSpec> baths{BathSpec(sigma_x(), OhmicSpectralDensity{2.0}, beta, gamma)};
  const Liouvillian l = build_liouvillian(two_level(gap), baths);
  const Eigen::Matrix2d k = oracle::two_level_rates(gap, gamma * gamma, 2.0, beta);
  for (int m = 0; m < 2; ++m) {
    for (int o = 0; o < 2; ++o) {
      EXPECT_NEAR(l.superoperator(m * 2 + m, o * 2 + o).real(), k(m, o), 1e-15);
    }
  }
}

TEST(SteadyState, TwoLevelBoltzmann) {
  const double gap = 1.0, beta = 2.0;
  const std::vector<BathSpec> baths{BathSpec(sigma_x(), OhmicSpectralDensity{2.0}, beta, 1e-3)};
  const SteadyState ss = redfield_steady_state(build_liouvillian(two_level(gap), baths));
  const double z = 1.0 + std::exp(-beta * gap);
  EXPECT_NEAR(ss.rho.matrix()(0, 0).real(), 1.0 / z, 1e-10);
  EXPECT_NEAR(ss.rho.matrix()(1, 1).real(), std::exp(-beta * gap) / z, 1e-10);
  EXPECT_LT(std::abs(ss.rho.matrix()(0, 1)), 1e-10);
}

TEST(SteadyState, ParityBathsAtZeroBiasAreDegenerate) {
  const ModelParams p{2.0, 1.0, 0.0, 5};
  const Liouvillian l = build_liouvillian(build_qrm(p), projected_baths(p, 90.0, 1.0, 1e-5));
  EXPECT_THROW(redfield_steady_state(l), DegenerateSteadyStateError);
}

TEST(SteadyState, ParityBlocksDecouple) {
  const ModelParams p{2.0, 1.3, 0.0, 5};
  const std::vector<BathSpec> baths = projected_baths(p, 2.0, 0.5, 0.1);
  const Liouvillian l = build_liouvillian(build_qrm(p), baths);
  const ParityProjectors pp = parity_projectors(p.dims());
  const Matrix pe = l.context.to_eigenbasis(pp.even.matrix());
  const Matrix po = l.context.to_eigenbasis(pp.odd.matrix());
  std::mt19937_64 rng(4);
  const Matrix x = l.context.to_eigenbasis(oracle::random_density(p.dims().total(), 3, rng));
  const Matrix block = pe * x * pe + po * x * po;
  const Matrix y = l.apply(block);
  EXPECT_LT((pe * y * po).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT(std::abs((pe * y).trace()), 1e-14);
}

TEST(SteadyState, SectorGibbsIsStationary) {
  const ModelParams p{2.0, 1.3, 0.0, 8};
  const HermitianOperator h = build_qrm(p);
  const double beta = 2.0;
  const Liouvillian l = build_liouvillian(h, projected_baths(p, beta, beta, 0.1));
  const ParityProjectors pp = parity_projectors(p.dims());
  const DensityOperator th = thermal_state(h, beta);
  const double pe = (pp.even.matrix() * th.matrix()).trace().real();
  const DensityOperator rho =
      sector_steady_state(h, pp.even, pp.odd, {pe, 1.0 - pe, beta, beta});
  const Matrix y = l.apply(l.context.to_eigenbasis(rho.matrix()));
  EXPECT_LT(y.cwiseAbs().maxCoeff(), 1e-10 * l.dissipator_scale);
}

TEST(SteadyState, LargeSystemMatchesDenseRoute) {
  ModelParams p{2.0, 1.8, 0.4, 6};
  const Liouvillian l = build_liouvillian(build_qrm_eps(p), projected_baths(p, 90.0, 1.0, 1e-3));
  SteadyStateOptions dense, iterative;
  dense.dense_svd_limit = 1 << 20;
  const SteadyState a = redfield_steady_state(l, dense);
  const SteadyState b = redfield_steady_state(l, iterative);
  EXPECT_LT((a.rho.matrix() - b.rho.matrix()).cwiseAbs().maxCoeff(), 1e-8);
}

}  // namespace
}  // namespace csvent
