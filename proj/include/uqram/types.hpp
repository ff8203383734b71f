// Copyright 2026 The uqramsim Authors
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

#include <Eigen/Dense>

namespace uqram {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Ordered subsystem dimensions; their product is the matrix side length.
using Dims = std::vector<Index>;

// Default cap on the total Hilbert-space dimension (covers n <= 3 address
// qubits with small ancilla and reference registers). Overridable per call.
inline constexpr Index kDefaultDimCap = 4096;

namespace tol {

// Max-abs anti-Hermitian part accepted by Hermitian-only operations.
inline constexpr double kHermitian = 1e-9;
// State validity (trace deviation, negativity, Hermiticity).
inline constexpr double kState = 1e-9;
// Kraus completeness: max-abs deviation of sum K'K from identity.
inline constexpr double kChannel = 1e-9;
// POVM effects: PSD slack and closure deviation.
inline constexpr double kPovm = 1e-9;
// Eigenvalues strictly above this enter the positive-part projector;
// values in [-kPositivePart, kPositivePart] go to the complement.
inline constexpr double kPositivePart = 1e-12;
// Hypothesis priors must sum to one within this.
inline constexpr double kPriors = 1e-12;
// Probability lists must sum to one within this.
inline constexpr double kDistribution = 1e-9;
inline constexpr double kUnitary = 1e-12;
// Saturation of the TV bound: 0.5*||tau+ - tau-||_1 > 1 - kSaturation.
inline constexpr double kSaturation = 1e-9;
// Pseudo-inverse cutoff: eigenvalues at or below this count as kernel.
inline constexpr double kPseudoInverseCutoff = 1e-10;
// TV distance at or below this is treated as degenerate (zero).
inline constexpr double kDegenerateTv = 1e-12;
// Fuzz campaigns fail when any identity deviates by more than this.
inline constexpr double kOpacity = 1e-8;

}  // namespace tol

inline Index dims_product(const Dims& dims) {
  Index product = 1;
  for (Index d : dims) product *= d;
  return product;
}

}  // namespace uqram
