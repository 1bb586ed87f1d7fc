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

#include <Eigen/Dense>
#include <vector>

#include "dispersim/circuit.hpp"

namespace dispersim {

using Operator = Eigen::MatrixXcd;

// Qubit (dim 2) tensor resonator (dim res_dim) Hilbert space,
// basis |q, n> with q in {g = 0, e = 1}, index = q * res_dim + n.
// Qubit-major so that a qubit sector is one contiguous slice.
struct HilbertSpec {
  int res_dim;  // number of Fock states S, >= 2

  int dim() const { return 2 * res_dim; }
  int index(int q, int n) const { return q * res_dim + n; }
  int qubit_of(int idx) const { return idx / res_dim; }
  int fock_of(int idx) const { return idx % res_dim; }
  // total excitation of a basis state, counting the qubit as 0/1
  int excitation(int idx) const { return qubit_of(idx) + fock_of(idx); }
};

enum class PauliOp { x, y, z, plus, minus };

// Resonator annihilation operator on the full space, a = 1_2 (x) a_res.
Operator annihilation(const HilbertSpec& spec);

// Qubit Pauli / ladder operator tensored with the resonator identity.
// sigma_z = |e><e| - |g><g|, sigma_plus = |e><g|.
Operator pauli(PauliOp which, const HilbertSpec& spec);

// Jaynes-Cummings Hamiltonian in qubit-frequency units:
// H = sigma_z / 2 + omega_res' a†a + g' (sigma_- a† + sigma_+ a).
Operator jc_hamiltonian(const DerivedParams& params, const HilbertSpec& spec);

// Dispersive-frame Hamiltonian, diagonal in the product basis:
// H = (1 + 2 g' lambda) sigma_z / 2 + (omega_res' + g' lambda sigma_z) a†a
//     + g' lambda sigma_- sigma_+.
Operator dispersive_hamiltonian(const DerivedParams& params,
                                const HilbertSpec& spec);

// Closed-form level energy of |q, n> in qubit-frequency units; n is the
// resonator occupation. Matches the dispersive Hamiltonian diagonal.
double eigenenergy(int qubit, int n, const DerivedParams& params);

// Dispersive transformation U = exp(lambda (sigma_+ a - sigma_- a†)).
// Unitary up to truncation-edge effects.
Operator dispersive_transform(const DerivedParams& params,
                              const HilbertSpec& spec);

struct JumpOperator {
  double omega;  // Bohr frequency released to the bath (qubit-frequency units)
  Operator op;
};

// Decomposes a coupling operator A into eigenoperators of the diagonal
// Hamiltonian: A(w) collects <i|A|j> with E_j - E_i = w, so that
// sum_w A(w) = A exactly and A(-w) = A(w)†. Bohr frequencies closer than
// `tol` are merged (transitively); a merge across distinct transition
// families ((q -> q') and photon-number direction) throws DegenerateGrouping.
std::vector<JumpOperator> jump_operators(const Operator& h_diag,
                                         const Operator& coupling,
                                         const HilbertSpec& spec, double tol);

// Smallest S >= 2 such that the truncated-away thermal weight of the top
// Fock level, (n/(1+n))^(S-1) / (1+n), does not exceed p_max.
int truncation_select(double temperature, double omega_res,
                      double p_max = 1e-7);

}  // namespace dispersim
