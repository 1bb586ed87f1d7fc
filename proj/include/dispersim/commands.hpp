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

#include <string>

#include "dispersim/config.hpp"

namespace dispersim {

struct CommandOptions {
  double gamma_b = 5026.0;  // background decoherence rate [1/s]
  int jobs = 1;             // worker threads for sweep points
  unsigned seed = 0;        // reserved for randomized fixtures
};

// JSON report of the derived master-equation parameters; re-ingesting the
// echoed circuit/bath section reproduces the report byte for byte.
std::string cmd_derive(const RunConfig& config);

struct EvolveResult {
  std::string csv;      // t_omegaA, sx, sy, sz, n_res, coherence
  std::string sidecar;  // JSON: rates, fits, spectral cross-check
};

// Full trajectory plus the mode-decomposition cross-check and decay fits.
EvolveResult cmd_evolve(const RunConfig& config,
                        const CommandOptions& options = {});

// Sweep CSV: sweep_var, gamma_prime, gf_prime, T_K, n_bar, Gamma2R,
// Gamma2R_unfiltered, gamma_nbar_estimate, T2_s. Rates are in
// qubit-frequency units; T2_s folds in the background rate in seconds.
// Point failures are recorded as nan rows and the sweep continues.
std::string cmd_rates(const RunConfig& config,
                      const CommandOptions& options = {});

// Bath-discretization convergence table:
// delta_omega, n_modes, max_rel_deviation.
std::string cmd_bathcheck(const RunConfig& config);

// Shared 17-significant-digit float formatting for deterministic output.
std::string format_g17(double value);

}  // namespace dispersim
