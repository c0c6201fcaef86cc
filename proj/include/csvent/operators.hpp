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

#ifndef CSVENT_OPERATORS_HPP
#define CSVENT_OPERATORS_HPP

#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "csvent/errors.hpp"

namespace csvent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct Tolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double psd = 1e-8;
  double eigen = 1e-9;
};

/// Dimensions of a bipartite Hilbert space A (x) B.
///
/// Basis state |s, n> with s in [0, d_a) and n in [0, d_b) sits at composite
/// index s * d_b + n. For the spin-boson models s = 0 is |down>, s = 1 is |up>
/// and n counts bosons.
class BipartiteDims {
 public:
  BipartiteDims(int d_a, int d_b);

  int d_a() const { return d_a_; }
  int d_b() const { return d_b_; }
  int total() const { return d_a_ * d_b_; }

  int index(int s, int n) const;
  std::pair<int, int> split(int index) const;

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;

 private:
  int d_a_;
  int d_b_;
};

int product_index(int s, int n, const BipartiteDims& dims);

/// Hermitian matrix on a bipartite space. The stored matrix is exactly
/// Hermitian: inputs within tolerance are symmetrized on construction.
class HermitianOperator {
 public:
  HermitianOperator(Matrix matrix, BipartiteDims dims,
                    double tol = Tolerances{}.hermiticity);

  const Matrix& matrix() const { return matrix_; }
  const BipartiteDims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  Matrix matrix_;
  BipartiteDims dims_;
};

struct ValidationReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool hermitian = true;
  bool trace_ok = true;
  bool positive = true;

  bool ok() const { return hermitian && trace_ok && positive; }
  std::string describe() const;
};

ValidationReport validate_density(const Matrix& rho, const BipartiteDims& dims,
                                  const Tolerances& tol = {});

/// Unit-trace positive semidefinite Hermitian matrix. Construction validates.
class DensityOperator {
 public:
  DensityOperator(Matrix matrix, BipartiteDims dims, const Tolerances& tol = {});

  const Matrix& matrix() const { return matrix_; }
  const BipartiteDims& dims() const { return dims_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ValidationReport& validation() const { return report_; }

 private:
  Matrix matrix_;
  BipartiteDims dims_;
  ValidationReport report_;
};

/// Transpose over subsystem A: out[(i,j),(k,l)] = in[(k,j),(i,l)].
Matrix partial_transpose(const Matrix& m, const BipartiteDims& dims);
Matrix partial_transpose(const DensityOperator& rho);

/// Transpose over subsystem B: out[(i,j),(k,l)] = in[(i,l),(k,j)].
Matrix partial_transpose_b(const Matrix& m, const BipartiteDims& dims);

struct Eigensystem {
  RealVector values;  // ascending
  Matrix vectors;     // columns
};

Eigensystem hermitian_eigensystem(const HermitianOperator& h);
Eigensystem hermitian_eigensystem(const Matrix& h,
                                  double tol = Tolerances{}.hermiticity);

double hermiticity_defect(const Matrix& m);
double max_abs(const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace csvent

#endif  // CSVENT_OPERATORS_HPP
