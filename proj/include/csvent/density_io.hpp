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

#ifndef CSVENT_DENSITY_IO_HPP
#define CSVENT_DENSITY_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "csvent/operators.hpp"

namespace csvent {

inline constexpr double kDumpThreshold = 1e-14;

/// Text dump: a header line `dims d_A d_B`, then one `row col re im` line per
/// entry with |value| > kDumpThreshold, written with 17 significant digits.
void write_density(std::ostream& out, const Matrix& rho,
                   const BipartiteDims& dims);

struct DensityFile {
  Matrix matrix;
  BipartiteDims dims;
};

/// Throws ParseError carrying the byte offset of the offending token.
DensityFile parse_density(std::string_view text);
DensityFile read_density(const std::string& path);

}  // namespace csvent

#endif  // CSVENT_DENSITY_IO_HPP
