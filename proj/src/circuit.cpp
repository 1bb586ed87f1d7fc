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

#include "dispersim/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dispersim/constants.hpp"
#include "dispersim/errors.hpp"
#include "dispersim/log.hpp"

namespace dispersim {

namespace {

constexpr double pi = std::numbers::pi;

void validate(const CircuitSpec& c, const BathSpec& b) {
  if (!(c.C_qubit > 0.0)) throw InvalidCircuit("C_qubit must be > 0");
  if (!(c.C_res > 0.0)) throw InvalidCircuit("C_res must be > 0");
  if (!(c.C_coupling >= 0.0)) throw InvalidCircuit("C_coupling must be >= 0");
  if (!(c.L_line > 0.0)) throw InvalidCircuit("L_line must be > 0");
  if (!(c.k_coupling >= 0.0 && c.k_coupling < 1.0))
    throw InvalidCircuit("k_coupling must be in [0, 1)");
  if (!(c.omega_qubit > 0.0)) throw InvalidCircuit("omega_qubit must be > 0");
  if (!(c.omega_res > 0.0)) throw InvalidCircuit("omega_res must be > 0");
  if (c.omega_qubit == c.omega_res)
    throw InvalidCircuit("omega_qubit == omega_res: zero detuning");
  if (!(b.resistance > 0.0)) throw InvalidCircuit("resistance must be > 0");
  if (!(b.cutoff > 0.0)) throw InvalidCircuit("cutoff must be > 0");
  if (!(b.temperature >= 0.0)) throw InvalidCircuit("temperature must be >= 0");
}

void warn(std::vector<std::string>* sink, const std::string& msg) {
  log::info(msg);
  if (sink != nullptr) sink->push_back(msg);
}

}  // namespace

DerivedParams derive_params(const CircuitSpec& circuit, const BathSpec& bath,
                            std::vector<std::string>* warnings) {
  validate(circuit, bath);

  DerivedParams p{};
  p.omega_qubit = circuit.omega_qubit;
  p.cap_det = circuit.C_qubit * circuit.C_res +
              circuit.C_res * circuit.C_coupling +
              circuit.C_coupling * circuit.C_qubit;
  p.L_res = 1.0 / (circuit.C_res * circuit.omega_res * circuit.omega_res);
  p.M = circuit.k_coupling * std::sqrt(circuit.L_line * p.L_res);
  p.g_qr = 0.5 * circuit.C_coupling *
           std::sqrt(circuit.omega_qubit * circuit.omega_res /
                     ((circuit.C_res + circuit.C_coupling) *
                      (circuit.C_qubit + circuit.C_coupling)));
  p.mu = std::sqrt(constants::hbar * (circuit.C_qubit + circuit.C_coupling) /
                   (2.0 * p.cap_det * circuit.omega_res));
  p.chi = bath.resistance * p.mu * p.mu / (constants::hbar * p.L_res * p.L_res);
  p.alpha = p.M / circuit.L_line;
  p.detuning = circuit.omega_qubit - circuit.omega_res;
  p.lambda = p.g_qr / p.detuning;
  p.n_bar = bose_einstein(circuit.omega_res, bath.temperature);
  p.gamma = 2.0 * pi * p.alpha * p.alpha *
            spectral_density(circuit.omega_res, p, bath);
  p.g_prime = p.g_qr / circuit.omega_qubit;
  p.gamma_prime = p.gamma / circuit.omega_qubit;
  p.omega_res_prime = circuit.omega_res / circuit.omega_qubit;
  p.delta_prime = p.detuning / circuit.omega_qubit;

  if (std::abs(p.lambda) >= 1.0)
    throw DispersiveViolation("|lambda| >= 1: not in the dispersive regime");
  if (std::abs(p.lambda) > 0.1)
    warn(warnings, "dispersive validity marginal: |lambda| = " +
                       std::to_string(std::abs(p.lambda)) + " > 0.1");
  if (bath.cutoff < 10.0 * circuit.omega_res)
    warn(warnings, "ohmic form marginal: cutoff < 10 * omega_res");

  return p;
}

double spectral_density(double omega, const DerivedParams& params,
                        const BathSpec& bath) {
  if (!(omega > 0.0))
    throw std::domain_error("spectral_density requires omega > 0");
  const double wc2 = bath.cutoff * bath.cutoff;
  return params.chi * wc2 / (pi * omega * (wc2 + omega * omega));
}

double bose_einstein(double omega, double temperature) {
  if (!(omega > 0.0))
    throw std::domain_error("bose_einstein requires omega > 0");
  if (!(temperature >= 0.0))
    throw std::domain_error("bose_einstein requires T >= 0");
  if (temperature == 0.0) return 0.0;
  // expm1 keeps precision at high T and overflows to +inf (-> 0) at low T.
  return 1.0 / std::expm1(constants::hbar * omega /
                          (constants::k_B * temperature));
}

std::complex<double> resistor_impedance(double omega, const BathSpec& bath) {
  const double wc = bath.cutoff;
  const double denom = wc * wc + omega * omega;
  return {bath.resistance * wc * wc / denom,
          bath.resistance * omega * wc / denom};
}

BathModes discretize_bath(const BathSpec& bath, const DerivedParams& params,
                          double delta_omega, int count) {
  if (!(delta_omega > 0.0))
    throw std::invalid_argument("delta_omega must be > 0");
  if (count < 1) throw std::invalid_argument("count must be >= 1");

  BathModes out;
  out.delta_omega = delta_omega;
  out.modes.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    BathMode m{};
    m.omega = static_cast<double>(k) * delta_omega;
    const double re_z = resistor_impedance(m.omega, bath).real();
    m.L = 2.0 * delta_omega * re_z / (pi * m.omega * m.omega);
    m.C = pi / (2.0 * delta_omega * re_z);
    const double wc2 = bath.cutoff * bath.cutoff;
    m.h = std::sqrt(constants::hbar * delta_omega * bath.resistance * wc2 /
                    (pi * m.omega * (wc2 + m.omega * m.omega))) *
          params.mu / params.L_res;
    out.modes.push_back(m);
  }
  return out;
}

}  // namespace dispersim
