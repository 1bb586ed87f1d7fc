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

#include "dispersim/liouville.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "dispersim/errors.hpp"

namespace dispersim {

namespace {
const std::complex<double> I(0.0, 1.0);
}

ComplexVector vectorize(const Operator& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("vectorize requires a square matrix");
  const int d = int(rho.rows());
  ComplexVector v(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i * d + j) = rho(i, j);
  return v;
}

Operator devectorize(const ComplexVector& v) {
  const int d = int(std::lround(std::sqrt(double(v.size()))));
  if (Eigen::Index(d) * d != v.size())
    throw std::invalid_argument("devectorize requires a square-length vector");
  Operator rho(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rho(i, j) = v(i * d + j);
  return rho;
}

Superoperator build_liouvillian(const Operator& h_dispersive,
                                double gamma_prime, double n_bar,
                                const HilbertSpec& spec) {
  if (gamma_prime < 0.0) throw std::invalid_argument("gamma_prime < 0");
  if (n_bar < 0.0) throw std::invalid_argument("n_bar < 0");
  const int dim = spec.dim();
  if (h_dispersive.rows() != dim || h_dispersive.cols() != dim)
    throw std::invalid_argument("Hamiltonian dimension mismatch");

  const Operator a = annihilation(spec);
  const Operator ad = a.adjoint();
  const Operator id = Operator::Identity(dim, dim);
  const Operator aad = a * ad;
  const Operator ada = ad * a;

  Superoperator L =
      -I * (Eigen::kroneckerProduct(h_dispersive, id).eval() -
            Eigen::kroneckerProduct(id, h_dispersive.transpose()).eval());
  L += gamma_prime * n_bar *
       (Eigen::kroneckerProduct(ad, a.transpose()).eval() -
        0.5 * Eigen::kroneckerProduct(aad, id).eval() -
        0.5 * Eigen::kroneckerProduct(id, aad.transpose()).eval());
  L += gamma_prime * (1.0 + n_bar) *
       (Eigen::kroneckerProduct(a, ad.transpose()).eval() -
        0.5 * Eigen::kroneckerProduct(ada, id).eval() -
        0.5 * Eigen::kroneckerProduct(id, ada.transpose()).eval());
  return L;
}

Superoperator number_superoperator(const HilbertSpec& spec) {
  const int dim = spec.dim();
  Superoperator n = Superoperator::Zero(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      n(i * dim + j, i * dim + j) =
          double(spec.excitation(i) - spec.excitation(j));
  return n;
}

LiouvillianBlock block_layout(const HilbertSpec& spec, int d) {
  const int dim = spec.dim();
  LiouvillianBlock block;
  block.d = d;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (spec.excitation(i) - spec.excitation(j) != d) continue;
      block.indices.push_back(i * dim + j);
      block.basis.push_back({spec.qubit_of(i), spec.fock_of(i),
                             spec.qubit_of(j), spec.fock_of(j)});
    }
  }
  return block;
}

std::vector<LiouvillianBlock> split_blocks(const Superoperator& liouvillian,
                                           const Superoperator& number_superop,
                                           const HilbertSpec& spec) {
  const double comm_norm =
      (number_superop * liouvillian - liouvillian * number_superop)
          .cwiseAbs()
          .maxCoeff();
  if (comm_norm > 1e-10)
    throw SymmetryViolation("[N, L] max-norm " + std::to_string(comm_norm) +
                            " exceeds 1e-10");

  std::vector<LiouvillianBlock> blocks;
  const int S = spec.res_dim;
  for (int k = 0; k <= S; ++k) {
    for (int sign : {+1, -1}) {
      if (k == 0 && sign < 0) continue;
      LiouvillianBlock block = block_layout(spec, sign * k);
      const int n = int(block.indices.size());
      block.entries.resize(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          block.entries(r, c) =
              liouvillian(block.indices[r], block.indices[c]);
      blocks.push_back(std::move(block));
    }
  }
  return blocks;
}

LiouvillianBlock build_block(const Operator& h_dispersive, double gamma_prime,
                             double n_bar, const HilbertSpec& spec, int d) {
  const Operator a = annihilation(spec);
  const Operator ad = a.adjoint();
  const Operator aad = a * ad;
  const Operator ada = ad * a;
  const int dim = spec.dim();
  if (h_dispersive.rows() != dim)
    throw std::invalid_argument("Hamiltonian dimension mismatch");

  LiouvillianBlock block = block_layout(spec, d);
  const int n = int(block.indices.size());
  block.entries.resize(n, n);
  for (int r = 0; r < n; ++r) {
    const int i = block.indices[r] / dim;
    const int j = block.indices[r] % dim;
    for (int c = 0; c < n; ++c) {
      const int k = block.indices[c] / dim;
      const int l = block.indices[c] % dim;
      const double d_ik = (i == k) ? 1.0 : 0.0;
      const double d_jl = (j == l) ? 1.0 : 0.0;
      std::complex<double> val =
          -I * (h_dispersive(i, k) * d_jl - d_ik * h_dispersive(l, j));
      val += gamma_prime * n_bar *
             (ad(i, k) * a(l, j) -
              0.5 * (aad(i, k) * d_jl + d_ik * aad(l, j)));
      val += gamma_prime * (1.0 + n_bar) *
             (a(i, k) * ad(l, j) -
              0.5 * (ada(i, k) * d_jl + d_ik * ada(l, j)));
      block.entries(r, c) = val;
    }
  }
  return block;
}

ComplexVector vectorized_pauli(PauliOp which, const HilbertSpec& spec) {
  if (which != PauliOp::x && which != PauliOp::y)
    throw std::invalid_argument("vectorized_pauli supports x and y");
  return vectorize(pauli(which, spec));
}

void dump_block_json(const LiouvillianBlock& block, std::ostream& os) {
  os << "{\"d\":" << block.d << ",\"basis\":[";
  for (std::size_t i = 0; i < block.basis.size(); ++i) {
    const auto& b = block.basis[i];
    os << (i ? "," : "") << '[' << b.q_left << ',' << b.n_left << ','
       << b.q_right << ',' << b.n_right << ']';
  }
  os << "],\"entries\":[";
  char buf[64];
  bool first = true;
  for (int r = 0; r < block.entries.rows(); ++r) {
    for (int c = 0; c < block.entries.cols(); ++c) {
      if (!first) os << ',';
      first = false;
      std::snprintf(buf, sizeof buf, "[%.17g,%.17g]",
                    block.entries(r, c).real(), block.entries(r, c).imag());
      os << buf;
    }
  }
  os << "]}";
}

}  // namespace dispersim
