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
#include <iosfwd>
#include <vector>

#include "dispersim/operators.hpp"

namespace dispersim {

using Superoperator = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Row-major vectorization: |i><j| -> e_i (x) e_j, so vec(rho)[i*dim+j] =
// rho(i,j) and superoperators act as A rho B -> (A (x) B^T) vec(rho).
// Under this convention <<A|rho>> = vec(A)† vec(rho) = Tr[A† rho].
ComplexVector vectorize(const Operator& rho);
Operator devectorize(const ComplexVector& v);

// Lindblad generator of the dispersive qubit-resonator master equation in
// qubit-frequency units:
//   L = -i (H (x) 1 - 1 (x) H^T)
//       + gamma' n_bar    (a† (x) a† - 1/2 a a† (x) 1 - 1/2 1 (x) (a a†)^T)
//       + gamma' (1+n_bar)(a  (x) a  - 1/2 a† a (x) 1 - 1/2 1 (x) (a† a)^T).
// The Lamb-shift term is omitted.
Superoperator build_liouvillian(const Operator& h_dispersive,
                                double gamma_prime, double n_bar,
                                const HilbertSpec& spec);

// Diagonal superoperator of the excitation-difference grading: the basis
// pair |q,n><q',m| has eigenvalue d = (q + n) - (q' + m), with the qubit
// counted 0/1.
Superoperator number_superoperator(const HilbertSpec& spec);

// One left/right basis pair |q,n><q',m| of a Liouville-space block.
struct BlockBasisPair {
  int q_left, n_left;
  int q_right, n_right;
};

// One charge sector of the Liouvillian: the submatrix over all basis pairs
// with a fixed excitation difference d.
struct LiouvillianBlock {
  int d;
  std::vector<int> indices;  // vec-space indices of the basis pairs
  std::vector<BlockBasisPair> basis;
  Eigen::MatrixXcd entries;
};

// Index bookkeeping for a charge sector; `entries` left empty.
LiouvillianBlock block_layout(const HilbertSpec& spec, int d);

// Splits L into its charge sectors, ordered d = 0, +1, -1, +2, -2, ...
// Requires max-norm of [N, L] <= 1e-10 (throws SymmetryViolation).
// Gathering is exact: scattering the blocks back reproduces L.
std::vector<LiouvillianBlock> split_blocks(const Superoperator& liouvillian,
                                           const Superoperator& number_superop,
                                           const HilbertSpec& spec);

// Assembles a single charge sector directly from matrix elements without
// materializing the full (2S)^2-dimensional generator.
LiouvillianBlock build_block(const Operator& h_dispersive, double gamma_prime,
                             double n_bar, const HilbertSpec& spec, int d);

// vec(sigma_x (x) 1) and vec(sigma_y (x) 1); support is exactly the d = +-1
// sectors.
ComplexVector vectorized_pauli(PauliOp which, const HilbertSpec& spec);

// JSON dump {d, basis: [[q,n,q',m], ...], entries: [[re,im], ...]} with
// entries flattened row-major.
void dump_block_json(const LiouvillianBlock& block, std::ostream& os);

}  // namespace dispersim
