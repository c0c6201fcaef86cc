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

#include "csvent/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace csvent {

BipartiteDims::BipartiteDims(int d_a, int d_b) : d_a_(d_a), d_b_(d_b) {
  if (d_a < 1 || d_b < 1) {
    throw ParameterError("subsystem dimensions must be positive, got (" +
                         std::to_string(d_a) + ", " + std::to_string(d_b) + ")");
  }
}

int BipartiteDims::index(int s, int n) const {
  if (s < 0 || s >= d_a_ || n < 0 || n >= d_b_) {
    throw IndexError("product label (" + std::to_string(s) + ", " +
                     std::to_string(n) + ") out of range for dims (" +
                     std::to_string(d_a_) + ", " + std::to_string(d_b_) + ")");
  }
  return s * d_b_ + n;
}

std::pair<int, int> BipartiteDims::split(int index) const {
  if (index < 0 || index >= total()) {
    throw IndexError("composite index " + std::to_string(index) +
                     " out of range");
  }
  return {index / d_b_, index % d_b_};
}

int product_index(int s, int n, const BipartiteDims& dims) {
  return dims.index(s, n);
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) {
  return max_abs(m - m.adjoint());
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

void require_shape(const Matrix& m, const BipartiteDims& dims) {
  if (m.rows() != m.cols()) {
    throw ShapeError("matrix is not square (" + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + ")");
  }
  if (m.rows() != dims.total()) {
    throw ShapeError("matrix dimension " + std::to_string(m.rows()) +
                     " does not match dims " + std::to_string(dims.d_a()) +
                     "x" + std::to_string(dims.d_b()));
  }
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix matrix, BipartiteDims dims,
                                     double tol)
    : matrix_(std::move(matrix)), dims_(dims) {
  require_shape(matrix_, dims_);
  const double defect = hermiticity_defect(matrix_);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "operator is not Hermitian (defect " << defect << ")";
    throw ContractError(os.str());
  }
  Matrix sym = (matrix_ + matrix_.adjoint()) * 0.5;
  matrix_ = std::move(sym);
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  os << (ok() ? "valid" : "invalid") << " density operator:"
     << " hermiticity defect " << hermiticity_defect
     << (hermitian ? "" : " [FAIL]") << ", trace defect " << trace_defect
     << (trace_ok ? "" : " [FAIL]") << ", min eigenvalue " << min_eigenvalue
     << (positive ? "" : " [FAIL]");
  return os.str();
}

ValidationReport validate_density(const Matrix& rho, const BipartiteDims& dims,
                                  const Tolerances& tol) {
  require_shape(rho, dims);
  ValidationReport report;
  report.hermiticity_defect = hermiticity_defect(rho);
  report.hermitian = report.hermiticity_defect <= tol.hermiticity;
  report.trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
  report.trace_ok = report.trace_defect <= tol.trace;
  // Spectrum of the Hermitian part; a non-Hermitian input already fails above.
  const Matrix sym = (rho + rho.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.positive = report.min_eigenvalue >= -tol.psd;
  return report;
}

DensityOperator::DensityOperator(Matrix matrix, BipartiteDims dims,
                                 const Tolerances& tol)
    : matrix_(std::move(matrix)), dims_(dims) {
  report_ = validate_density(matrix_, dims_, tol);
  if (!report_.ok()) {
    throw ValidationError(report_.describe());
  }
}

Matrix partial_transpose(const Matrix& m, const BipartiteDims& dims) {
  require_shape(m, dims);
  const int da = dims.d_a();
  const int db = dims.d_b();
  Matrix out(m.rows(), m.cols());
  // Block (i, k) of the output is block (k, i) of the input.
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < da; ++k) {
      out.block(i * db, k * db, db, db) = m.block(k * db, i * db, db, db);
    }
  }
  return out;
}

Matrix partial_transpose(const DensityOperator& rho) {
  return partial_transpose(rho.matrix(), rho.dims());
}

Matrix partial_transpose_b(const Matrix& m, const BipartiteDims& dims) {
  require_shape(m, dims);
  const int da = dims.d_a();
  const int db = dims.d_b();
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < da; ++k) {
      out.block(i * db, k * db, db, db) =
          m.block(i * db, k * db, db, db).transpose();
    }
  }
  return out;
}

Eigensystem hermitian_eigensystem(const Matrix& h, double tol) {
  if (h.rows() != h.cols()) {
    throw ShapeError("eigensystem requires a square matrix");
  }
  const double defect = hermiticity_defect(h);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "eigensystem requires a Hermitian matrix (defect " << defect << ")";
    throw ContractError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver((h + h.adjoint()) * 0.5);
  if (solver.info() != Eigen::Success) {
    throw SolverError("Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigensystem hermitian_eigensystem(const HermitianOperator& h) {
  return hermitian_eigensystem(h.matrix());
}

}  // namespace csvent
