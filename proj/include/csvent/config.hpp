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

#ifndef CSVENT_CONFIG_HPP
#define CSVENT_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "csvent/models.hpp"

namespace csvent {

enum class ModelKind { Jcm, Qrm, QrmEps };
enum class StateKind { Thermal, Sector, Redfield };
// Redfield bath layout: parity-projected even/odd pair, or one unprojected bath.
enum class BathLayout { Parity, Single };

/// Sweep description. The text format is one `key = value` per line, keys
/// named exactly as the fields below; `#` starts a comment.
struct SweepConfig {
  ModelKind model = ModelKind::Qrm;
  StateKind state_kind = StateKind::Thermal;
  double delta = 2.0;
  double epsilon = 0.0;
  double beta = 90.0;
  double beta_e = 90.0;
  double beta_o = 90.0;
  double p_e = 0.5;
  double p_o = 0.5;
  double gamma_e = 1e-5;
  double gamma_o = 1e-5;
  double omega_c = 0.0;  // 0 selects omega_c = delta
  BathLayout baths = BathLayout::Parity;
  double lambda_min = 0.0;
  double lambda_max = 3.5;
  int lambda_steps = 141;
  int n_max = kDefaultBosonCutoff;
  int threads = 1;
  std::string out;
  std::string plot;

  std::vector<double> lambda_grid() const;
  ModelParams model_params(double lambda) const;
  double cutoff() const { return omega_c > 0.0 ? omega_c : delta; }
};

/// Names accepted by parse_config and apply_setting.
const std::vector<std::string>& config_keys();

SweepConfig parse_config(std::string_view text);
SweepConfig load_config(const std::string& path);

/// Sets one field from its text value. Throws ParameterError on bad input.
void apply_setting(SweepConfig& config, std::string_view key,
                   std::string_view value);

/// Throws ParameterError when the config is unusable for its state kind.
void validate_config(const SweepConfig& config);

std::string to_string(ModelKind kind);
std::string to_string(StateKind kind);

}  // namespace csvent

#endif  // CSVENT_CONFIG_HPP
