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
#include <vector>

#include "dispersim/liouville.hpp"

namespace dispersim {

// Truncated thermal state of the resonator (S x S), renormalized so the
// trace is exactly 1. The renormalized geometric distribution is an exact
// fixed point of the truncated dissipator.
Operator thermal_state(double n_bar, int res_dim);

// Truncated coherent state |alpha><alpha|, renormalized; throws
// TruncationLoss when the discarded weight exceeds 1e-6.
Operator coherent_state(std::complex<double> alpha, int res_dim);

enum class QubitInit { plus, ground, excited };

// Product state rho_qubit (x) rho_resonator on the full space.
Operator initial_state(QubitInit qubit, const Operator& resonator);
Operator initial_state(const Eigen::Matrix2cd& qubit,
                       const Operator& resonator);

// Reduced qubit state: partial trace over the resonator.
Eigen::Matrix2cd reduced_qubit(const Operator& rho, const HilbertSpec& spec);

// l1 coherence of the reduced qubit state, |rho_ge| + |rho_eg|
// (= sqrt(<sx>^2 + <sy>^2) for a Hermitian state).
double coherence_measure(const Operator& rho, const HilbertSpec& spec);

struct Trajectory {
  std::vector<double> times;  // qubit-frequency units
  std::vector<double> sx, sy, sz, n_res, coherence;
};

// Time evolution rho(t) = e^{L t} rho(0) recorded at the given times.
// One matrix exponential per distinct time step, applied repeatedly.
// Pass `states` to also collect the density operators.
Trajectory propagate(const Superoperator& liouvillian, const Operator& rho0,
                     const std::vector<double>& times,
                     std::vector<Operator>* states = nullptr);

// max_t |<sigma_z>(t) - <sigma_z>(0)| over `samples` points in [0, horizon].
double sigma_z_conservation(const Superoperator& liouvillian,
                            const Operator& rho0, double horizon,
                            int samples = 50);

// Max-norm of L vec(rho_steady) for the steady family
// a |e><e| (x) rho_th + (1-a) |g><g| (x) rho_th.
double steady_state_residual(const Superoperator& liouvillian, double a_weight,
                             double n_bar, int res_dim);

// Difference between [U, D] rho_q (x) rho_th and its closed form
// i g' lambda [sigma_z, rho_q] (x) D[a†a rho_th]; vanishes at n_bar = 0.
Operator blockade_commutator(const DerivedParams& params,
                             const Eigen::Matrix2cd& rho_qubit, double n_bar,
                             const HilbertSpec& spec);

struct FitResult {
  double rate;       // decay rate (positive for decaying signals)
  double r_squared;  // coefficient of determination of the log-linear fit
  double intercept;  // log-amplitude at t = 0
};

// Least-squares slope of log(coherence) over [t_lo, t_hi]. No quality gate;
// used for transient windows where the signal is multi-mode by nature.
FitResult fit_log_slope(const Trajectory& traj, double t_lo, double t_hi);

// Single-exponential decay rate over the window; throws NonExponential
// when R^2 < 0.99.
double fit_decay_rate(const Trajectory& traj, double t_lo, double t_hi);

struct DirectRates {
  double up;           // absorption rate [rad/s]
  double down;         // emission rate [rad/s]
  double decoherence;  // (up + down) / 2
  double dissipation;  // up + down
};

// Golden-rule rates for a drive line coupled straight to the qubit with
// dimensionless strength zeta: down = 2 pi zeta^2 J(w_A)(1 + n(w_A)),
// up = 2 pi zeta^2 J(w_A) n(w_A).
DirectRates direct_coupling_rates(double zeta, const DerivedParams& params,
                                  const BathSpec& bath);

// Strong-dispersive estimate gamma' * n_bar of the coherence decay rate.
double strong_dispersive_estimate(double gamma_prime, double n_bar);

}  // namespace dispersim
