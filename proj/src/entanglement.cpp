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

#include "csvent/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace csvent {

double negativity(const DensityOperator& rho, double cutoff) {
  const Matrix pt = partial_transpose(rho);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(pt, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw SolverError("eigensolver failed on partial transpose");
  }
  double total = 0.0;
  for (double value : solver.eigenvalues()) {
    if (value < -cutoff) total -= value;
  }
  return total;
}

CsvReport cauchy_schwarz_violations(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("Cauchy-Schwarz check requires a square matrix");
  }
  CsvReport report;
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 1; i < n; ++i) {
    const double mii = m(i, i).real();
    for (Eigen::Index j = 0; j < i; ++j) {
      const double v = std::norm(m(i, j)) - mii * m(j, j).real();
      if (v > 0.0) {
        report.S += v;
        report.violating_pairs.push_back(
            {static_cast<int>(i), static_cast<int>(j), v});
      }
    }
  }
  std::stable_sort(report.violating_pairs.begin(), report.violating_pairs.end(),
                   [](const ViolatingPair& a, const ViolatingPair& b) {
                     return a.magnitude > b.magnitude;
                   });
  return report;
}

CsvReport csv_S(const DensityOperator& rho) {
  return cauchy_schwarz_violations(partial_transpose(rho));
}

double csv_direct(const DensityOperator& rho) {
  const Matrix& m = rho.matrix();
  const BipartiteDims& dims = rho.dims();
  const int da = dims.d_a();
  const int db = dims.d_b();
  // For A labels i > k and any B labels j != l, the coherence <k,j|rho|i,l>
  // must be supported by the populations of |i,j> and |k,l>.
  double total = 0.0;
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < i; ++k) {
      for (int j = 0; j < db; ++j) {
        const double pop_ij = m(dims.index(i, j), dims.index(i, j)).real();
        for (int l = 0; l < db; ++l) {
          if (l == j) continue;
          const double coh = std::norm(m(dims.index(k, j), dims.index(i, l)));
          const double pop_kl = m(dims.index(k, l), dims.index(k, l)).real();
          total += std::max(coh - pop_ij * pop_kl, 0.0);
        }
      }
    }
  }
  return total;
}

namespace {

// Advances `idx` to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

double principal_minor(const Matrix& a, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  Matrix sub(k, k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) sub(r, c) = a(idx[r], idx[c]);
  }
  return sub.determinant().real();
}

}  // namespace

MinorWitness principal_minor_witness(const Matrix& a, int max_order,
                                     double tol) {
  if (a.rows() != a.cols()) {
    throw ShapeError("principal minors require a square matrix");
  }
  const int n = static_cast<int>(a.rows());
  if (n > kMaxWitnessDim) {
    throw CapabilityError(
        "exhaustive principal-minor search is limited to dimension " +
        std::to_string(kMaxWitnessDim) + " (got " + std::to_string(n) +
        "); check the smallest eigenvalue instead");
  }
  if (max_order < 1 || max_order > n) {
    throw ParameterError("max_order must lie in [1, " + std::to_string(n) +
                         "]");
  }
  if (hermiticity_defect(a) > Tolerances{}.hermiticity) {
    throw ContractError("principal-minor witness requires a Hermitian matrix");
  }
  for (int order = 1; order <= max_order; ++order) {
    std::vector<int> idx(order);
    for (int i = 0; i < order; ++i) idx[i] = i;
    do {
      const double minor = principal_minor(a, idx);
      if (minor < -tol) return {false, idx, minor};
    } while (next_combination(idx, n));
  }
  return {};
}

}  // namespace csvent
