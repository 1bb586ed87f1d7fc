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

#include <stdexcept>
#include <string>

namespace dispersim {

// Nonphysical circuit element value (nonpositive capacitance, ...).
struct InvalidCircuit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// |g / Delta| >= 1: the dispersive expansion does not apply.
struct DispersiveViolation : std::domain_error {
  using std::domain_error::domain_error;
};

// Two Bohr frequencies closer than the grouping tolerance but belonging to
// distinct transition families.
struct DegenerateGrouping : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// [N, L] != 0 beyond tolerance: block splitting would be lossy.
struct SymmetryViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Left/right eigenvector pair with vanishing overlap: the matrix is
// (numerically) non-diagonalizable and must not be silently regularized.
struct DefectiveMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No eigenmode passed the observable-overlap filter.
struct EmptyModeSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated state lost more probability weight than allowed.
struct TruncationLoss : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Log-linear fit rejected: the windowed trajectory is not single-exponential.
struct NonExponential : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration file failed schema validation. `path` is the offending
// field in dotted notation.
struct ConfigError : std::runtime_error {
  ConfigError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path(path) {}
  std::string path;
};

}  // namespace dispersim
