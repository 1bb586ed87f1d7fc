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
#include <string>
#include <vector>

namespace dispersim {

// Lumped-element values of the qubit / readout-resonator circuit, all SI.
// The resonator inductance is not listed: it follows from the resonator
// capacitance and resonance frequency, L_res = 1 / (C_res * omega_res^2).
struct CircuitSpec {
  double C_qubit;      // transmon shunt capacitance [F]
  double C_res;        // readout resonator capacitance [F]
  double C_coupling;   // qubit-resonator coupling capacitance [F]
  double L_line;       // drive-line coupling inductance [H]
  double k_coupling;   // mutual inductance coefficient, M = k sqrt(L_line L_res)
  double omega_qubit;  // qubit angular frequency [rad/s]
  double omega_res;    // resonator angular frequency [rad/s]
};

// Resistive environment seen through the drive line: an ohmic bath with a
// Lorentz-Drude cutoff. Valid as a resistor model for omega << cutoff.
struct BathSpec {
  double resistance;   // [ohm]
  double cutoff;       // cutoff angular frequency omega_c [rad/s]
  double temperature;  // [K]
};

// Everything the master equation needs, derived from the circuit. SI values
// live only here; downstream modules consume the omega_qubit-normalized
// (primed) quantities g_prime, gamma_prime, n_bar, lambda, delta_prime.
//
// Sign convention: `detuning` is signed, omega_qubit - omega_res, and
// `lambda` = g_qr / detuning inherits the sign. Validity checks are on
// |lambda|. This keeps the dispersive diagonal identical to the closed-form
// level energies without branch-dependent constants.
struct DerivedParams {
  double omega_qubit;      // normalization anchor [rad/s]
  double cap_det;          // C_qubit C_res + C_res C_coupling + C_coupling C_qubit [F^2]
  double L_res;            // resonator inductance [H]
  double M;                // mutual inductance [H]
  double g_qr;             // qubit-resonator coupling [rad/s]
  double mu;               // resonator flux zero-point factor [Wb]
  double chi;              // spectral density prefactor R mu^2 / (hbar L_res^2) [rad/s]
  double alpha;            // M / L_line, bath-resonator interaction strength
  double gamma;            // resonator dissipation rate 2 pi alpha^2 J(omega_res) [rad/s]
  double n_bar;            // thermal photon number at omega_res
  double lambda;           // g_qr / detuning (signed, dimensionless)
  double detuning;         // omega_qubit - omega_res (signed) [rad/s]
  double g_prime;          // g_qr / omega_qubit
  double gamma_prime;      // gamma / omega_qubit
  double omega_res_prime;  // omega_res / omega_qubit
  double delta_prime;      // detuning / omega_qubit
};

// One LC stage of the discretized resistor plus its coupling to the
// resonator.
struct BathMode {
  double omega;  // [rad/s]
  double L;      // [H]
  double C;      // [F]
  double h;      // resonator-mode coupling coefficient [J]
};

struct BathModes {
  double delta_omega;  // frequency step [rad/s]
  std::vector<BathMode> modes;
};

// Maps the circuit onto the master-equation parameters.
// Throws InvalidCircuit on nonphysical element values and
// DispersiveViolation when |lambda| >= 1. Advisory conditions
// (|lambda| > 0.1, cutoff < 10 omega_res) are appended to `warnings`
// when given and logged at info level.
DerivedParams derive_params(const CircuitSpec& circuit, const BathSpec& bath,
                            std::vector<std::string>* warnings = nullptr);

// Ohmic spectral density J(omega) = chi omega_c^2 / (pi omega (omega_c^2 + omega^2)).
// Diverges as omega -> 0+; throws std::domain_error for omega <= 0.
double spectral_density(double omega, const DerivedParams& params,
                        const BathSpec& bath);

// Bose-Einstein occupation at angular frequency omega and temperature T;
// exactly 0 at T = 0.
double bose_einstein(double omega, double temperature);

// Resistor impedance R omega_c^2/(omega_c^2+omega^2) + i R omega omega_c/(omega_c^2+omega^2).
std::complex<double> resistor_impedance(double omega, const BathSpec& bath);

// Discretizes the resistor into `count` LC stages at omega_k = k delta_omega.
// Each stage reproduces 1/sqrt(L_k C_k) = omega_k exactly, and
// |h_k|^2 / (hbar^2 delta_omega) = J(omega_k) by construction.
BathModes discretize_bath(const BathSpec& bath, const DerivedParams& params,
                          double delta_omega, int count);

}  // namespace dispersim
