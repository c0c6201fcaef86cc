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

#ifndef CSVENT_STATES_HPP
#define CSVENT_STATES_HPP

#include "csvent/operators.hpp"

namespace csvent {

/// exp(-beta H) / Z via the eigendecomposition of H, with the ground energy
/// subtracted before exponentiating.
DensityOperator thermal_state(const HermitianOperator& h, double beta);

struct SectorParams {
  double p_even = 0.5;
  double p_odd = 0.5;
  double beta_even = 90.0;
  double beta_odd = 90.0;
};

/// p_e P_e e^{-beta_e H} P_e / Z_e + p_o P_o e^{-beta_o H} P_o / Z_o.
///
/// Each sector is diagonalized on its own subspace and the Gibbs blocks are
/// reassembled. Requires [H, P_e] = 0; throws SymmetryError otherwise.
DensityOperator sector_steady_state(const HermitianOperator& h,
                                    const HermitianOperator& p_even,
                                    const HermitianOperator& p_odd,
                                    const SectorParams& sector);

}  // namespace csvent

#endif  // CSVENT_STATES_HPP
