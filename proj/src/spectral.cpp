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

#include "dispersim/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "dispersim/errors.hpp"

namespace dispersim {

ModeSet eig_general(const LiouvillianBlock& block) {
  const int n = int(block.entries.rows());
  if (n == 0) return {block.d, {}};
  if (!block.entries.allFinite())
    throw std::invalid_argument("block has non-finite entries");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(block.entries, true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigensolver failed to converge");
  const Eigen::MatrixXcd& right = solver.eigenvectors();  // unit columns

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(right);
  const Eigen::MatrixXcd right_inv = lu.solve(
      Eigen::MatrixXcd::Identity(n, n));
  // Row i of right_inv is the bra of mode i; with unit right columns its
  // norm is 1/|<left_unit|right>|, so a huge row flags a defective pair.
  for (int i = 0; i < n; ++i) {
    const double raw_overlap = 1.0 / right_inv.row(i).norm();
    if (!(raw_overlap >= 1e-12))
      throw DefectiveMatrix("left/right overlap " +
                            std::to_string(raw_overlap) +
                            " below 1e-12: block is defective");
  }

  ModeSet out;
  out.d = block.d;
  out.modes.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ra = std::abs(solver.eigenvalues()(a).real());
    const double rb = std::abs(solver.eigenvalues()(b).real());
    if (ra != rb) return ra < rb;
    return solver.eigenvalues()(a).imag() < solver.eigenvalues()(b).imag();
  });
  for (int i = 0; i < n; ++i) {
    const int k = order[i];
    out.modes[i].lambda = solver.eigenvalues()(k);
    out.modes[i].right = right.col(k);
    out.modes[i].left = right_inv.row(k).adjoint();
  }
  return out;
}

std::vector<std::complex<double>> mode_coefficients(
    const Operator& rho0, const ModeSet& modes,
    const LiouvillianBlock& block) {
  const ComplexVector v = vectorize(rho0);
  ComplexVector restricted(block.indices.size());
  for (std::size_t k = 0; k < block.indices.size(); ++k)
    restricted(Eigen::Index(k)) = v(block.indices[k]);

  std::vector<std::complex<double>> c;
  c.reserve(modes.modes.size());
  for (const auto& mode : modes.modes)
    c.push_back(mode.left.dot(restricted));  // <<left|rho>>
  return c;
}

std::vector<std::complex<double>> mode_overlaps(const ComplexVector& obs_vec,
                                                const ModeSet& modes,
                                                const LiouvillianBlock& block) {
  ComplexVector restricted(block.indices.size());
  for (std::size_t k = 0; k < block.indices.size(); ++k)
    restricted(Eigen::Index(k)) = obs_vec(block.indices[k]);

  std::vector<std::complex<double>> p;
  p.reserve(modes.modes.size());
  for (const auto& mode : modes.modes)
    p.push_back(restricted.dot(mode.right));  // <<obs|v>>
  return p;
}

std::vector<double> reconstruct_coherence(
    const std::vector<std::complex<double>>& coefficients,
    const std::vector<std::complex<double>>& overlaps, const ModeSet& modes,
    const std::vector<double>& times) {
  const std::size_t n = modes.modes.size();
  if (coefficients.size() != n || overlaps.size() != n)
    throw std::invalid_argument("coefficient/overlap count mismatch");

  std::vector<double> out(times.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> weight = coefficients[i] * overlaps[i];
    const double amp = 2.0 * std::abs(weight);
    if (amp == 0.0) continue;
    const double phase = std::arg(weight);
    const double re = modes.modes[i].lambda.real();
    const double im = modes.modes[i].lambda.imag();
    for (std::size_t t = 0; t < times.size(); ++t)
      out[t] += amp * std::exp(re * times[t]) *
                std::cos(im * times[t] + phase);
  }
  return out;
}

double decoherence_rate(const ModeSet& modes,
                        const std::vector<std::complex<double>>& overlaps,
                        double eps_overlap) {
  if (overlaps.size() != modes.modes.size())
    throw std::invalid_argument("overlap count mismatch");
  double best = -1.0;
  for (std::size_t i = 0; i < modes.modes.size(); ++i) {
    if (std::abs(overlaps[i]) <= eps_overlap) continue;
    const double rate = std::abs(modes.modes[i].lambda.real());
    if (best < 0.0 || rate < best) best = rate;
  }
  if (best < 0.0)
    throw EmptyModeSet("no mode passes the observable-overlap filter");
  return best;
}

double decoherence_rate_unfiltered(const ModeSet& modes) {
  if (modes.modes.empty()) throw EmptyModeSet("empty mode set");
  double best = std::abs(modes.modes.front().lambda.real());
  for (const auto& mode : modes.modes)
    best = std::min(best, std::abs(mode.lambda.real()));
  return best;
}

void dump_modes_csv(const ModeSet& modes,
                    const std::vector<std::complex<double>>& overlaps,
                    std::ostream& os) {
  os << "d,re_lambda,im_lambda,overlap_sigma_x_abs\n";
  char buf[128];
  for (std::size_t i = 0; i < modes.modes.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", modes.d,
                  modes.modes[i].lambda.real(), modes.modes[i].lambda.imag(),
                  i < overlaps.size() ? std::abs(overlaps[i]) : 0.0);
    os << buf;
  }
}

}  // namespace dispersim
