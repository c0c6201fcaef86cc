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

#include "csvent/entanglement.hpp"
#include "csvent/models.hpp"
#include "oracles.hpp"

namespace csvent {
namespace {

DensityOperator bell() {
  Matrix rho = Matrix::Zero(4, 4);
  rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
  return DensityOperator(rho, BipartiteDims(2, 2));
}

// Two-qubit state whose partial transpose is (W (+) 1.5) / 4.5, where W has
// unit diagonal and off-diagonals -0.6 on |0,0>, |0,1>, |1,0>. Every 2x2
// minor of the PT is positive, the 3x3 block is not.
DensityOperator hidden_negativity_state() {
  Matrix rho = Matrix::Zero(4, 4);
  rho.diagonal() << 1.0, 1.0, 1.0, 1.5;
  rho(0, 1) = rho(1, 0) = -0.6;
  rho(0, 2) = rho(2, 0) = -0.6;
  rho(0, 3) = rho(3, 0) = -0.6;
  return DensityOperator(rho / 4.5, BipartiteDims(2, 2));
}

// Sum of clamped violations of PT(rho) over pairs whose A and B labels both
// differ, computed from the explicit four-index transpose.
double restricted_csv_oracle(const Matrix& rho, int da, int db) {
  const Matrix m = oracle::partial_transpose(rho, da, db);
  double total = 0.0;
  for (int r = 0; r < da * db; ++r) {
    for (int c = 0; c < r; ++c) {
      if (r / db == c / db || r % db == c % db) continue;
      total += std::max(std::norm(m(r, c)) - m(r, r).real() * m(c, c).real(), 0.0);
    }
  }
  return total;
}

TEST(Negativity, DiagonalStateIsZero) {
  Matrix rho = Matrix::Zero(6, 6);
  rho.diagonal() << 0.3, 0.1, 0.2, 0.1, 0.2, 0.1;
  EXPECT_EQ(negativity(DensityOperator(rho, BipartiteDims(2, 3))), 0.0);
}

TEST(Negativity, BellStateIsOneHalf) {
  EXPECT_NEAR(negativity(bell()), 0.5, 1e-14);
}

TEST(Negativity, JcmLowerDressedStateAtLambdaTwo) {
  const ModelParams p{2.0, 2.0, 0.0, 4};
  const Vector g = jcm_eigensystem(p, 1)[1].state;
  const DensityOperator rho(g * g.adjoint(), p.dims());
  EXPECT_NEAR(negativity(rho), 2.0 / std::sqrt(17.0), 1e-12);
  EXPECT_NEAR(csv_S(rho).S, 4.0 / 17.0, 1e-12);
}

TEST(Negativity, BoundsMostNegativeEigenvalue) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Matrix m = oracle::random_density(6, 1 + t % 2, rng);
    const DensityOperator rho(m, BipartiteDims(2, 3));
    const double lmin = oracle::min_eigenvalue(oracle::partial_transpose(m, 2, 3));
    EXPECT_GE(negativity(rho) + 1e-12, std::max(0.0, -lmin));
  }
}

TEST(CsvS, MaximallyMixedIsZero) {
  const DensityOperator rho(Matrix::Identity(8, 8) / 8.0, BipartiteDims(2, 4));
  const CsvReport r = csv_S(rho);
  EXPECT_EQ(r.S, 0.0);
  EXPECT_TRUE(r.violating_pairs.empty());
}

TEST(CsvS, BellStateSinglePair) {
  const CsvReport r = csv_S(bell());
  EXPECT_NEAR(r.S, 0.25, 1e-15);
  ASSERT_EQ(r.violating_pairs.size(), 1u);
  EXPECT_EQ(r.violating_pairs[0].row, 2);  // |1,0>
  EXPECT_EQ(r.violating_pairs[0].col, 1);  // |0,1>
  EXPECT_NEAR(r.violating_pairs[0].magnitude, 0.25, 1e-15);
}

TEST(CsvS, ReportInvariants) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const DensityOperator rho(oracle::random_density(12, 1, rng), BipartiteDims(3, 4));
    const CsvReport r = csv_S(rho);
    double sum = 0.0;
    for (std::size_t i = 0; i < r.violating_pairs.size(); ++i) {
      EXPECT_GT(r.violating_pairs[i].magnitude, 0.0);
      EXPECT_GT(r.violating_pairs[i].row, r.violating_pairs[i].col);
      if (i > 0) {
        EXPECT_GE(r.violating_pairs[i - 1].magnitude, r.violating_pairs[i].magnitude);
      }
      sum += r.violating_pairs[i].magnitude;
    }
    EXPECT_NEAR(r.S, sum, 1e-15);
  }
}

TEST(CsvDirect, BellState) { EXPECT_NEAR(csv_direct(bell()), 0.25, 1e-15); }

TEST(CsvDirect, DiagonalIsZero) {
  Matrix rho = Matrix::Zero(4, 4);
  rho.diagonal() << 0.4, 0.1, 0.2, 0.3;
  EXPECT_EQ(csv_direct(DensityOperator(rho, BipartiteDims(2, 2))), 0.0);
}

TEST(CsvDirect, MatchesRestrictedPartialTransposeSum) {
  std::mt19937_64 rng(23);
  const std::pair<int, int> shapes[] = {{2, 2}, {2, 3}, {2, 4}, {4, 2}, {3, 2}};
  for (int t = 0; t < 200; ++t) {
    const auto [da, db] = shapes[t % 5];
    const Matrix m = oracle::random_density(da * db, 1 + t % 3, rng);
    const DensityOperator rho(m, BipartiteDims(da, db));
    EXPECT_NEAR(csv_direct(rho), restricted_csv_oracle(m, da, db), 1e-12);
    // For a valid state the excluded pairs contribute nothing.
    EXPECT_NEAR(csv_direct(rho), csv_S(rho).S, 1e-12);
  }
}

TEST(Sufficiency, PositiveSImpliesPositiveN) {
  std::mt19937_64 rng(99);
  int positive = 0;
  for (int t = 0; t < 2000; ++t) {
    const int da = 2 + t % 2, db = 2 + (t / 2) % 3;
    const DensityOperator rho(oracle::random_density(da * db, 1 + t % 4, rng),
                              BipartiteDims(da, db));
    if (csv_S(rho).S > kNegativityCutoff) {
      ++positive;
      EXPECT_GT(negativity(rho), 0.0);
    }
  }
  EXPECT_GT(positive, 100);
}

TEST(Sufficiency, HiddenNegativityHasZeroS) {
  const DensityOperator rho = hidden_negativity_state();
  EXPECT_EQ(csv_S(rho).S, 0.0);
  EXPECT_NEAR(negativity(rho), 0.2 / 4.5, 1e-12);
  const MinorWitness w = principal_minor_witness(partial_transpose(rho), 4);
  EXPECT_FALSE(w.passed);
  EXPECT_EQ(w.failing_set, (std::vector<int>{0, 1, 2}));
}

TEST(Invariance, TransposingEitherSubsystemAgrees) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const BipartiteDims dims(2, 3);
    const Matrix m = oracle::random_density(6, 1 + t % 3, rng);
    const Matrix pt_b = partial_transpose_b(m, dims);
    const Matrix pt_a = partial_transpose(m, dims);
    EXPECT_NEAR(cauchy_schwarz_violations(pt_b).S, cauchy_schwarz_violations(pt_a).S,
                1e-15);
    Eigen::SelfAdjointEigenSolver<Matrix> ea(pt_a), eb(pt_b);
    EXPECT_LT((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(MinorWitness, TwoByTwo) {
  Matrix a(2, 2);
  a << 1.0, 2.0, 2.0, 1.0;
  const MinorWitness w = principal_minor_witness(a, 2);
  EXPECT_FALSE(w.passed);
  EXPECT_EQ(w.failing_set, (std::vector<int>{0, 1}));
  EXPECT_NEAR(w.minor, -3.0, 1e-12);
}

TEST(MinorWitness, ThirdOrderOnly) {
  Matrix a = Matrix::Constant(3, 3, -0.6);
  a.diagonal().setOnes();
  EXPECT_TRUE(principal_minor_witness(a, 2).passed);
  const MinorWitness w = principal_minor_witness(a, 3);
  EXPECT_FALSE(w.passed);
  EXPECT_EQ(w.failing_set, (std::vector<int>{0, 1, 2}));
  // det = 1 - 3(0.36) - 2(0.216) = -0.512
  EXPECT_NEAR(w.minor, -0.512, 1e-12);
}

TEST(MinorWitness, IdentityPasses) {
  for (int order = 1; order <= 5; ++order) {
    EXPECT_TRUE(principal_minor_witness(Matrix::Identity(5, 5), order).passed);
  }
}

TEST(MinorWitness, Errors) {
  EXPECT_THROW(principal_minor_witness(Matrix::Identity(13, 13), 2), CapabilityError);
  EXPECT_THROW(principal_minor_witness(Matrix::Identity(3, 3), 4), ParameterError);
  EXPECT_THROW(principal_minor_witness(Matrix::Identity(3, 3), 0), ParameterError);
}

TEST(MinorWitness, AgreesWithSmallestEigenvalue) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uni(0.2, 2.0);
  std::uniform_real_distribution<double> expo(-5.0, 0.0);
  for (int t = 0; t < 200; ++t) {
    const int dim = 1 + t % 8;
    Eigen::VectorXd ev(dim);
    for (int i = 0; i < dim; ++i) ev(i) = uni(rng);
    ev(0) = (t % 2 == 0 ? 1.0 : -1.0) * std::pow(10.0, expo(rng));
    const Matrix u = oracle::random_unitary(dim, rng);
    Matrix a = u * ev.cast<Complex>().asDiagonal() * u.adjoint();
    a = 0.5 * (a + a.adjoint()).eval();
    const bool psd = oracle::min_eigenvalue(a) >= 0.0;
    EXPECT_EQ(principal_minor_witness(a, dim).passed, psd) << "trial " << t;
  }
}

}  // namespace
}  // namespace csvent
