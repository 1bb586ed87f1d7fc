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
#include <iosfwd>
#include <vector>

#include "dispersim/liouville.hpp"

namespace dispersim {

// One eigenmode of a Liouvillian block. left is stored as a ket:
// <<left|v>> = left† v, normalized so that <<left_i|right_i>> = 1 and
// <<left_i|right_j>> = 0 for i != j.
struct EigenMode {
  std::complex<double> lambda;
  ComplexVector right;
  ComplexVector left;
};

struct ModeSet {
  int d;
  std::vector<EigenMode> modes;
};

// Full biorthonormalized spectrum of one block. Left vectors come from the
// inverse of the right-eigenvector matrix, which enforces biorthonormality
// to machine precision. Throws DefectiveMatrix when a left/right pair has
// overlap below 1e-12 before rescaling (Jordan-like block): the caller must
// fall back to propagator-based analysis instead of using regularized modes.
ModeSet eig_general(const LiouvillianBlock& block);

// Projection coefficients c_i = <<left_i | rho>> of a density operator onto
// the block's modes.
std::vector<std::complex<double>> mode_coefficients(
    const Operator& rho0, const ModeSet& modes, const LiouvillianBlock& block);

// Overlaps p_i = <<obs | right_i>> of a vectorized observable with the modes.
std::vector<std::complex<double>> mode_overlaps(const ComplexVector& obs_vec,
                                                const ModeSet& modes,
                                                const LiouvillianBlock& block);

// Mode-sum reconstruction of a coherence expectation value from the d = +1
// block (the d = -1 contribution is the complex conjugate, giving the
// factor 2):
//   <O(t)> = sum_i 2 |c_i p_i| e^{Re(l_i) t} cos(Im(l_i) t + arg(c_i p_i)).
std::vector<double> reconstruct_coherence(
    const std::vector<std::complex<double>>& coefficients,
    const std::vector<std::complex<double>>& overlaps, const ModeSet& modes,
    const std::vector<double>& times);

// Slowest coherence decay rate: min |Re lambda| over modes whose sigma_x
// overlap magnitude exceeds eps_overlap. Throws EmptyModeSet if the filter
// removes everything. Values below ~1e-14 are numerically indistinguishable
// from an exact zero.
double decoherence_rate(const ModeSet& modes,
                        const std::vector<std::complex<double>>& overlaps,
                        double eps_overlap = 1e-10);

// Same minimum taken over the whole block, without the overlap filter.
double decoherence_rate_unfiltered(const ModeSet& modes);

// CSV columns: d, re_lambda, im_lambda, overlap_sigma_x_abs.
void dump_modes_csv(const ModeSet& modes,
                    const std::vector<std::complex<double>>& overlaps,
                    std::ostream& os);

}  // namespace dispersim
