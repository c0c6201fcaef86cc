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

#ifndef CSVENT_ENTANGLEMENT_HPP
#define CSVENT_ENTANGLEMENT_HPP

#include <vector>

#include "csvent/operators.hpp"

namespace csvent {

inline constexpr double kNegativityCutoff = 1e-10;
inline constexpr double kMinorTolerance = 1e-12;
inline constexpr int kMaxWitnessDim = 12;

/// Sum of |lambda| over eigenvalues of the partial transpose below -cutoff.
double negativity(const DensityOperator& rho,
                  double cutoff = kNegativityCutoff);

/// One 2x2 principal minor of rho^PT that fails the Cauchy-Schwarz bound.
struct ViolatingPair {
  int row = 0;  // row > col
  int col = 0;
  double magnitude = 0.0;  // |M_rc|^2 - M_rr M_cc > 0
};

struct CsvReport {
  double S = 0.0;
  std::vector<ViolatingPair> violating_pairs;  // sorted by magnitude, descending
};

/// Cauchy-Schwarz violations of an arbitrary Hermitian matrix, summed over
/// pairs row > col and clamped at zero.
CsvReport cauchy_schwarz_violations(const Matrix& m);

/// CSV functional of rho: the violations of its partial transpose.
CsvReport csv_S(const DensityOperator& rho);

/// The same functional evaluated on the matrix elements of rho directly, with
/// no partial transpose formed. Covers every pair of product states whose A
/// and B labels both differ; the remaining pairs cannot violate for a valid
/// rho.
double csv_direct(const DensityOperator& rho);

struct MinorWitness {
  bool passed = true;
  std::vector<int> failing_set;  // empty when passed
  double minor = 0.0;            // determinant of the failing submatrix
};

/// Exhaustive Sylvester check: searches principal minors of increasing order
/// (lexicographic within an order) up to max_order and returns the first one
/// below -tol. Limited to dim <= kMaxWitnessDim.
MinorWitness principal_minor_witness(const Matrix& a, int max_order,
                                     double tol = kMinorTolerance);

}  // namespace csvent

#endif  // CSVENT_ENTANGLEMENT_HPP
