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

#include "csvent/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace csvent {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view text) {
  // Accepts plain decimals and simple ratios such as 2/3.
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    return parse_real(key, trim(text.substr(0, slash))) /
           parse_real(key, trim(text.substr(slash + 1)));
  }
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParameterError("'" + std::string(key) + "' expects a number, got '" +
                         std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParameterError("'" + std::string(key) + "' expects an integer, got '" +
                         std::string(text) + "'");
  }
  return value;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "model",      "state_kind", "delta",        "epsilon", "beta",
      "beta_e",     "beta_o",     "p_e",          "p_o",     "gamma_e",
      "gamma_o",    "omega_c",    "baths",        "lambda_min",
      "lambda_max", "lambda_steps", "n_max",      "threads", "out",
      "plot"};
  return keys;
}

void apply_setting(SweepConfig& c, std::string_view key, std::string_view raw) {
  const std::string_view v = trim(raw);
  if (key == "model") {
    if (v == "jcm") c.model = ModelKind::Jcm;
    else if (v == "qrm") c.model = ModelKind::Qrm;
    else if (v == "qrm_eps") c.model = ModelKind::QrmEps;
    else throw ParameterError("model must be jcm, qrm or qrm_eps");
  } else if (key == "state_kind") {
    if (v == "thermal") c.state_kind = StateKind::Thermal;
    else if (v == "sector") c.state_kind = StateKind::Sector;
    else if (v == "redfield") c.state_kind = StateKind::Redfield;
    else throw ParameterError("state_kind must be thermal, sector or redfield");
  } else if (key == "baths") {
    if (v == "parity") c.baths = BathLayout::Parity;
    else if (v == "single") c.baths = BathLayout::Single;
    else throw ParameterError("baths must be parity or single");
  } else if (key == "delta") c.delta = parse_real(key, v);
  else if (key == "epsilon") c.epsilon = parse_real(key, v);
  else if (key == "beta") c.beta = parse_real(key, v);
  else if (key == "beta_e") c.beta_e = parse_real(key, v);
  else if (key == "beta_o") c.beta_o = parse_real(key, v);
  else if (key == "p_e") c.p_e = parse_real(key, v);
  else if (key == "p_o") c.p_o = parse_real(key, v);
  else if (key == "gamma_e") c.gamma_e = parse_real(key, v);
  else if (key == "gamma_o") c.gamma_o = parse_real(key, v);
  else if (key == "omega_c") c.omega_c = parse_real(key, v);
  else if (key == "lambda_min") c.lambda_min = parse_real(key, v);
  else if (key == "lambda_max") c.lambda_max = parse_real(key, v);
  else if (key == "lambda_steps") c.lambda_steps = parse_int(key, v);
  else if (key == "n_max") c.n_max = parse_int(key, v);
  else if (key == "threads") c.threads = parse_int(key, v);
  else if (key == "out") c.out = std::string(v);
  else if (key == "plot") c.plot = std::string(v);
  else throw ParameterError("unknown config key '" + std::string(key) + "'");
}

SweepConfig parse_config(std::string_view text) {
  SweepConfig config;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    const std::size_t line_start = pos;
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_start);
    }
    try {
      apply_setting(config, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ParameterError& e) {
      throw ParseError(e.what(), line_start);
    }
  }
  return config;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open config '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<double> SweepConfig::lambda_grid() const {
  std::vector<double> grid;
  grid.reserve(lambda_steps > 0 ? lambda_steps : 0);
  if (lambda_steps == 1) {
    grid.push_back(lambda_min);
    return grid;
  }
  for (int i = 0; i < lambda_steps; ++i) {
    grid.push_back(lambda_min + (lambda_max - lambda_min) * i / (lambda_steps - 1));
  }
  return grid;
}

ModelParams SweepConfig::model_params(double lambda) const {
  ModelParams p;
  p.splitting = delta;
  p.coupling = lambda;
  p.bias = model == ModelKind::QrmEps ? epsilon : 0.0;
  p.n_max = n_max;
  return p;
}

void validate_config(const SweepConfig& c) {
  if (c.lambda_steps < 1) throw ParameterError("lambda_steps must be >= 1");
  if (c.lambda_steps > 1 && !(c.lambda_max > c.lambda_min)) {
    throw ParameterError("lambda grid must be increasing (lambda_max > lambda_min)");
  }
  if (c.n_max < 1) throw ParameterError("n_max must be >= 1");
  if (c.threads < 1) throw ParameterError("threads must be >= 1");
  if (!(c.delta > 0.0)) throw ParameterError("delta must be positive");
  switch (c.state_kind) {
    case StateKind::Thermal:
      if (!(c.beta > 0.0)) throw ParameterError("beta must be positive");
      break;
    case StateKind::Sector:
      if (c.p_e < 0.0 || c.p_o < 0.0 || std::abs(c.p_e + c.p_o - 1.0) > 1e-10) {
        throw ParameterError("sector state requires p_e + p_o = 1");
      }
      if (!(c.beta_e > 0.0) || !(c.beta_o > 0.0)) {
        throw ParameterError("sector state requires beta_e, beta_o > 0");
      }
      break;
    case StateKind::Redfield:
      if (c.baths == BathLayout::Single) {
        if (!(c.beta > 0.0)) throw ParameterError("beta must be positive");
        if (c.gamma_e < 0.0) throw ParameterError("gamma_e must be nonnegative");
      } else {
        if (!(c.beta_e > 0.0) || !(c.beta_o > 0.0)) {
          throw ParameterError("redfield baths require beta_e, beta_o > 0");
        }
        if (c.gamma_e < 0.0 || c.gamma_o < 0.0) {
          throw ParameterError("gamma_e, gamma_o must be nonnegative");
        }
      }
      if (c.omega_c < 0.0) throw ParameterError("omega_c must be nonnegative");
      break;
  }
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Jcm: return "jcm";
    case ModelKind::Qrm: return "qrm";
    case ModelKind::QrmEps: return "qrm_eps";
  }
  return "?";
}

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::Thermal: return "thermal";
    case StateKind::Sector: return "sector";
    case StateKind::Redfield: return "redfield";
  }
  return "?";
}

}  // namespace csvent
