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

#include "dispersim/operators.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dispersim/errors.hpp"

namespace dispersim {

namespace {

void check_spec(const HilbertSpec& spec) {
  if (spec.res_dim < 2)
    throw std::invalid_argument("resonator truncation must be >= 2");
}

}  // namespace

Operator annihilation(const HilbertSpec& spec) {
  check_spec(spec);
  Operator a = Operator::Zero(spec.dim(), spec.dim());
  for (int q = 0; q < 2; ++q)
    for (int n = 1; n < spec.res_dim; ++n)
      a(spec.index(q, n - 1), spec.index(q, n)) = std::sqrt(double(n));
  return a;
}

Operator pauli(PauliOp which, const HilbertSpec& spec) {
  check_spec(spec);
  Operator op = Operator::Zero(spec.dim(), spec.dim());
  for (int n = 0; n < spec.res_dim; ++n) {
    const int g = spec.index(0, n);
    const int e = spec.index(1, n);
    switch (which) {
      case PauliOp::x:
        op(e, g) = 1.0;
        op(g, e) = 1.0;
        break;
      case PauliOp::y:
        // i (sigma_- - sigma_+)
        op(g, e) = std::complex<double>(0.0, 1.0);
        op(e, g) = std::complex<double>(0.0, -1.0);
        break;
      case PauliOp::z:
        op(e, e) = 1.0;
        op(g, g) = -1.0;
        break;
      case PauliOp::plus:
        op(e, g) = 1.0;
        break;
      case PauliOp::minus:
        op(g, e) = 1.0;
        break;
    }
  }
  return op;
}

Operator jc_hamiltonian(const DerivedParams& params, const HilbertSpec& spec) {
  if (std::abs(params.lambda) >= 1.0)
    throw DispersiveViolation("|lambda| >= 1");
  const Operator a = annihilation(spec);
  const Operator ad = a.adjoint();
  return 0.5 * pauli(PauliOp::z, spec) + params.omega_res_prime * (ad * a) +
         params.g_prime *
             (pauli(PauliOp::minus, spec) * ad + pauli(PauliOp::plus, spec) * a);
}

Operator dispersive_hamiltonian(const DerivedParams& params,
                                const HilbertSpec& spec) {
  if (std::abs(params.lambda) >= 1.0)
    throw DispersiveViolation("|lambda| >= 1");
  check_spec(spec);
  const double shift = params.g_prime * params.lambda;
  Operator h = Operator::Zero(spec.dim(), spec.dim());
  for (int q = 0; q < 2; ++q) {
    const double sz = (q == 1) ? 1.0 : -1.0;
    for (int n = 0; n < spec.res_dim; ++n) {
      const int i = spec.index(q, n);
      h(i, i) = 0.5 * (1.0 + 2.0 * shift) * sz +
                (params.omega_res_prime + shift * sz) * double(n) +
                (q == 0 ? shift : 0.0);  // sigma_- sigma_+ = |g><g|
    }
  }
  return h;
}

double eigenenergy(int qubit, int n, const DerivedParams& params) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const double shift = params.g_prime * params.lambda;
  if (qubit == 0)
    return (double(n) - 0.5) * params.omega_res_prime -
           0.5 * params.delta_prime - double(n) * shift;
  // excited branch written for total excitation n + 1
  const double m = double(n) + 1.0;
  return (m - 0.5) * params.omega_res_prime + 0.5 * params.delta_prime +
         m * shift;
}

Operator dispersive_transform(const DerivedParams& params,
                              const HilbertSpec& spec) {
  if (std::abs(params.lambda) >= 1.0)
    throw DispersiveViolation("|lambda| >= 1");
  const Operator a = annihilation(spec);
  const Operator generator =
      params.lambda * (pauli(PauliOp::plus, spec) * a -
                       pauli(PauliOp::minus, spec) * a.adjoint());
  return generator.exp();
}

std::vector<JumpOperator> jump_operators(const Operator& h_diag,
                                         const Operator& coupling,
                                         const HilbertSpec& spec, double tol) {
  check_spec(spec);
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  const int dim = spec.dim();
  if (h_diag.rows() != dim || coupling.rows() != dim)
    throw std::invalid_argument("operator dimension mismatch");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (i != j && std::abs(h_diag(i, j)) != 0.0)
        throw std::invalid_argument("jump_operators requires a diagonal H");

  // One entry per nonzero <i|A|j>, keyed by Bohr frequency E_j - E_i.
  struct Transition {
    double omega;
    int i, j;
    int family;  // (q_i, q_j, sign(n_i - n_j)) encoded
  };
  std::vector<Transition> transitions;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (std::abs(coupling(i, j)) == 0.0) continue;
      const int dn = spec.fock_of(i) - spec.fock_of(j);
      const int sign = (dn > 0) - (dn < 0);
      Transition t;
      t.omega = (h_diag(j, j) - h_diag(i, i)).real();
      t.i = i;
      t.j = j;
      t.family = 9 * spec.qubit_of(i) + 3 * spec.qubit_of(j) + (sign + 1);
      transitions.push_back(t);
    }
  }
  std::sort(transitions.begin(), transitions.end(),
            [](const Transition& a, const Transition& b) {
              return a.omega < b.omega;
            });

  // Exactly degenerate frequencies from different families merge into one
  // jump operator (the g- and e-branch photon lines coincide at lambda = 0).
  // A cross-family merge with genuine frequency spread means `tol` is too
  // coarse to resolve the spectrum and is reported instead.
  constexpr double degeneracy_eps = 1e-12;

  std::vector<JumpOperator> out;
  std::size_t start = 0;
  while (start < transitions.size()) {
    std::size_t stop = start + 1;
    while (stop < transitions.size() &&
           transitions[stop].omega - transitions[stop - 1].omega <= tol)
      ++stop;

    const double spread = transitions[stop - 1].omega - transitions[start].omega;
    Operator op = Operator::Zero(dim, dim);
    double omega_sum = 0.0;
    for (std::size_t k = start; k < stop; ++k) {
      if (transitions[k].family != transitions[start].family &&
          spread > degeneracy_eps)
        throw DegenerateGrouping(
            "Bohr frequencies from distinct transition families fall within "
            "the grouping tolerance");
      const auto& t = transitions[k];
      op(t.i, t.j) = coupling(t.i, t.j);
      omega_sum += t.omega;
    }
    out.push_back({omega_sum / double(stop - start), std::move(op)});
    start = stop;
  }
  return out;
}

int truncation_select(double temperature, double omega_res, double p_max) {
  if (!(p_max > 0.0 && p_max < 1.0))
    throw std::invalid_argument("p_max must be in (0, 1)");
  const double n_bar = bose_einstein(omega_res, temperature);
  if (n_bar == 0.0) return 2;
  const double ratio = n_bar / (1.0 + n_bar);
  int s = 2;
  while (std::pow(ratio, double(s - 1)) / (1.0 + n_bar) > p_max) ++s;
  return s;
}

}  // namespace dispersim
