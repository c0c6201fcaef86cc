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

#ifndef CSVENT_CHECKPOINTS_HPP
#define CSVENT_CHECKPOINTS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace csvent {

enum class Comparison { Absolute, Relative, AtMost, AtLeast };

struct Checkpoint {
  std::string name;
  double expected = 0.0;  // reference value or bound
  double actual = 0.0;
  double tolerance = 0.0;  // unused for bounds
  Comparison comparison = Comparison::Absolute;
  bool passed = false;
  std::string note;
};

struct CheckpointOptions {
  double splitting = 2.0;  // used by the parameterized JCM checks
  int n_max = 45;          // boson cutoff for the QRM reference values
  int redfield_n_max = 25;
  bool include_redfield = true;
};

/// Regression over published reference values and qualitative trends.
/// Truncation warnings go to `warnings` when non-null.
std::vector<Checkpoint> run_checkpoints(const CheckpointOptions& options,
                                        std::ostream* warnings = nullptr);

void print_checkpoints(std::ostream& out, const std::vector<Checkpoint>& results);

}  // namespace csvent

#endif  // CSVENT_CHECKPOINTS_HPP
