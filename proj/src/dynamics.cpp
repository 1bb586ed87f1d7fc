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

#include "dispersim/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "dispersim/errors.hpp"

namespace dispersim {

namespace {
constexpr double pi = std::numbers::pi;
}

Operator thermal_state(double n_bar, int res_dim) {
  if (n_bar < 0.0) throw std::invalid_argument("n_bar < 0");
  if (res_dim < 2) throw std::invalid_argument("res_dim < 2");
  Operator rho = Operator::Zero(res_dim, res_dim);
  if (n_bar == 0.0) {
    rho(0, 0) = 1.0;
    return rho;
  }
  const double ratio = n_bar / (1.0 + n_bar);
  double norm = 0.0;
  for (int n = 0; n < res_dim; ++n) norm += std::pow(ratio, double(n));
  for (int n = 0; n < res_dim; ++n)
    rho(n, n) = std::pow(ratio, double(n)) / norm;
  return rho;
}

Operator coherent_state(std::complex<double> alpha, int res_dim) {
  if (res_dim < 2) throw std::invalid_argument("res_dim < 2");
  Eigen::VectorXcd amp(res_dim);
  // amplitudes e^{-|a|^2/2} a^n / sqrt(n!) built by recurrence
  amp(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < res_dim; ++n)
    amp(n) = amp(n - 1) * alpha / std::sqrt(double(n));
  const double kept = amp.squaredNorm();
  if (1.0 - kept > 1e-6)
    throw TruncationLoss("coherent state loses " + std::to_string(1.0 - kept) +
                         " weight at S = " + std::to_string(res_dim));
  amp /= std::sqrt(kept);
  return amp * amp.adjoint();
}

Operator initial_state(QubitInit qubit, const Operator& resonator) {
  Eigen::Matrix2cd rho_q = Eigen::Matrix2cd::Zero();
  switch (qubit) {
    case QubitInit::plus:
      rho_q << 0.5, 0.5, 0.5, 0.5;
      break;
    case QubitInit::ground:
      rho_q(0, 0) = 1.0;
      break;
    case QubitInit::excited:
      rho_q(1, 1) = 1.0;
      break;
  }
  return initial_state(rho_q, resonator);
}

Operator initial_state(const Eigen::Matrix2cd& qubit,
                       const Operator& resonator) {
  const int s = int(resonator.rows());
  Operator rho(2 * s, 2 * s);
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      rho.block(q1 * s, q2 * s, s, s) = qubit(q1, q2) * resonator;
  return rho;
}

Eigen::Matrix2cd reduced_qubit(const Operator& rho, const HilbertSpec& spec) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int q1 = 0; q1 < 2; ++q1)
    for (int q2 = 0; q2 < 2; ++q2)
      for (int n = 0; n < spec.res_dim; ++n)
        out(q1, q2) += rho(spec.index(q1, n), spec.index(q2, n));
  return out;
}

double coherence_measure(const Operator& rho, const HilbertSpec& spec) {
  const Eigen::Matrix2cd rho_q = reduced_qubit(rho, spec);
  return std::abs(rho_q(0, 1)) + std::abs(rho_q(1, 0));
}

Trajectory propagate(const Superoperator& liouvillian, const Operator& rho0,
                     const std::vector<double>& times,
                     std::vector<Operator>* states) {
  if (times.empty()) throw std::invalid_argument("empty time grid");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1]))
      throw std::invalid_argument("times must be strictly increasing");

  const int dim2 = int(liouvillian.rows());
  const int dim = int(std::lround(std::sqrt(double(dim2))));
  const HilbertSpec spec{dim / 2};
  const Operator sx = pauli(PauliOp::x, spec);
  const Operator sy = pauli(PauliOp::y, spec);
  const Operator sz = pauli(PauliOp::z, spec);
  const Operator a = annihilation(spec);
  const Operator num = a.adjoint() * a;

  // One exponential per distinct step size, reused across the grid. Steps
  // are matched with a 1e-9 relative slack so rounding in a uniform grid
  // does not trigger fresh exponentials.
  std::vector<std::pair<double, Superoperator>> propagators;
  auto stepper = [&](double dt) -> const Superoperator& {
    for (const auto& entry : propagators)
      if (std::abs(entry.first - dt) <= 1e-9 * std::max(entry.first, dt))
        return entry.second;
    propagators.emplace_back(dt, (liouvillian * dt).exp());
    return propagators.back().second;
  };

  Trajectory traj;
  traj.times = times;
  ComplexVector v = vectorize(rho0);
  double t_now = 0.0;
  for (double t : times) {
    if (t > t_now) {
      v = stepper(t - t_now) * v;
      t_now = t;
    }
    const Operator rho = devectorize(v);
    traj.sx.push_back((sx * rho).trace().real());
    traj.sy.push_back((sy * rho).trace().real());
    traj.sz.push_back((sz * rho).trace().real());
    traj.n_res.push_back((num * rho).trace().real());
    traj.coherence.push_back(coherence_measure(rho, spec));
    if (states != nullptr) states->push_back(rho);
  }
  return traj;
}

double sigma_z_conservation(const Superoperator& liouvillian,
                            const Operator& rho0, double horizon,
                            int samples) {
  if (samples < 2) throw std::invalid_argument("samples < 2");
  std::vector<double> times(samples);
  for (int k = 0; k < samples; ++k)
    times[k] = horizon * double(k + 1) / double(samples);
  const int dim = int(rho0.rows());
  const HilbertSpec spec{dim / 2};
  const double sz0 = (pauli(PauliOp::z, spec) * rho0).trace().real();
  const Trajectory traj = propagate(liouvillian, rho0, times);
  double dev = 0.0;
  for (double szt : traj.sz) dev = std::max(dev, std::abs(szt - sz0));
  return dev;
}

double steady_state_residual(const Superoperator& liouvillian, double a_weight,
                             double n_bar, int res_dim) {
  if (a_weight < 0.0 || a_weight > 1.0)
    throw std::invalid_argument("a_weight outside [0, 1]");
  const Operator rho_th = thermal_state(n_bar, res_dim);
  Eigen::Matrix2cd rho_q = Eigen::Matrix2cd::Zero();
  rho_q(1, 1) = a_weight;
  rho_q(0, 0) = 1.0 - a_weight;
  const Operator rho = initial_state(rho_q, rho_th);
  return (liouvillian * vectorize(rho)).cwiseAbs().maxCoeff();
}

Operator blockade_commutator(const DerivedParams& params,
                             const Eigen::Matrix2cd& rho_qubit, double n_bar,
                             const HilbertSpec& spec) {
  const Operator h = dispersive_hamiltonian(params, spec);
  const Superoperator unitary = build_liouvillian(h, 0.0, 0.0, spec);
  const Superoperator full =
      build_liouvillian(h, params.gamma_prime, n_bar, spec);
  const Superoperator dissipator = full - unitary;

  const Operator rho_th = thermal_state(n_bar, spec.res_dim);
  const ComplexVector v = vectorize(initial_state(rho_qubit, rho_th));
  const ComplexVector lhs =
      unitary * (dissipator * v) - dissipator * (unitary * v);

  // closed form: i g' lambda [sigma_z, rho_q] (x) D_res[a†a rho_th]
  const Operator a_res = annihilation(spec).topLeftCorner(
      spec.res_dim, spec.res_dim);  // single-sector copy
  const Operator ad_res = a_res.adjoint();
  const Operator x = ad_res * a_res * rho_th;
  const Operator d_res =
      params.gamma_prime * n_bar *
          (ad_res * x * a_res -
           0.5 * (a_res * ad_res * x + x * a_res * ad_res)) +
      params.gamma_prime * (1.0 + n_bar) *
          (a_res * x * ad_res -
           0.5 * (ad_res * a_res * x + x * ad_res * a_res));
  const Eigen::Matrix2cd sz = (Eigen::Matrix2cd() << -1, 0, 0, 1).finished();
  const Eigen::Matrix2cd comm_q = sz * rho_qubit - rho_qubit * sz;
  const Operator rhs = std::complex<double>(0.0, 1.0) * params.g_prime *
                       params.lambda * initial_state(comm_q, d_res);

  return devectorize(lhs) - rhs;
}

FitResult fit_log_slope(const Trajectory& traj, double t_lo, double t_hi) {
  std::vector<double> xs, ys;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double t = traj.times[k];
    if (t < t_lo || t > t_hi) continue;
    if (!(traj.coherence[k] > 1e-12)) continue;
    xs.push_back(t);
    ys.push_back(std::log(traj.coherence[k]));
  }
  if (xs.size() < 3)
    throw std::invalid_argument("fit window holds fewer than 3 usable points");

  const double n = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;

  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double fit = slope * xs[k] + intercept;
    ss_res += (ys[k] - fit) * (ys[k] - fit);
    ss_tot += (ys[k] - mean_y) * (ys[k] - mean_y);
  }
  const double r2 = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
  return {-slope, r2, intercept};
}

double fit_decay_rate(const Trajectory& traj, double t_lo, double t_hi) {
  const FitResult fit = fit_log_slope(traj, t_lo, t_hi);
  if (fit.r_squared < 0.99)
    throw NonExponential("log-linear fit R^2 = " +
                         std::to_string(fit.r_squared) + " < 0.99");
  return fit.rate;
}

DirectRates direct_coupling_rates(double zeta, const DerivedParams& params,
                                  const BathSpec& bath) {
  const double j_at_qubit =
      spectral_density(params.omega_qubit, params, bath);
  const double occupation =
      bose_einstein(params.omega_qubit, bath.temperature);
  DirectRates rates{};
  rates.down = 2.0 * pi * zeta * zeta * j_at_qubit * (1.0 + occupation);
  rates.up = 2.0 * pi * zeta * zeta * j_at_qubit * occupation;
  rates.dissipation = rates.up + rates.down;
  rates.decoherence = 0.5 * rates.dissipation;
  return rates;
}

double strong_dispersive_estimate(double gamma_prime, double n_bar) {
  return gamma_prime * n_bar;
}

}  // namespace dispersim
