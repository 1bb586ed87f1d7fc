// Copyright 2026 The dispersim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <optional>
#include <string>

#include "dispersim/circuit.hpp"
#include "dispersim/dynamics.hpp"

namespace dispersim {

struct SimulationConfig {
  std::optional<int> res_dim;  // explicit S; auto-selected when absent
  double p_max = 1e-7;         // occupancy bound for auto truncation
  double t_max = 1e5;          // horizon, qubit-frequency units
  int n_times = 200;
};

enum class SweepVariable { temperature, gamma_prime, gf_prime };
enum class GridKind { log, linear };

struct SweepConfig {
  SweepVariable variable = SweepVariable::temperature;
  GridKind grid = GridKind::log;
  double min = 0.0;
  double max = 0.0;
  int points = 0;
};

enum class ResonatorInit { thermal, coherent };

struct InitialConfig {
  QubitInit qubit = QubitInit::plus;
  ResonatorInit resonator = ResonatorInit::thermal;
  std::complex<double> alpha{0.0, 0.0};
};

struct OverrideConfig {
  std::optional<double> gf_prime;     // replaces the circuit-derived g'
  std::optional<double> gamma_prime;  // replaces the circuit-derived gamma'
};

struct BathcheckConfig {
  std::vector<double> delta_omegas;  // [rad/s]; defaults filled on load
  double omega_min = 0.0;            // window checked; defaults omega_res/2
  double omega_max = 0.0;            // and 2 omega_res
};

struct RunConfig {
  CircuitSpec circuit{};
  BathSpec bath{};
  SimulationConfig simulation{};
  InitialConfig initial{};
  std::optional<SweepConfig> sweep;
  OverrideConfig overrides{};
  BathcheckConfig bathcheck{};
};

// Parses and validates a config. Unknown keys, type mismatches and
// out-of-range values throw ConfigError carrying the dotted field path.
RunConfig load_config(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

// Derived parameters with the optional overrides applied (lambda is
// recomputed from an overridden g').
DerivedParams effective_params(const RunConfig& config,
                               std::vector<std::string>* warnings = nullptr);

// S from the config: the explicit value if set (warned about when it
// violates the occupancy bound), otherwise auto-selected; for coherent
// starts the truncation also keeps the discarded coherent weight under 1e-6.
int select_res_dim(const RunConfig& config);

}  // namespace dispersim
