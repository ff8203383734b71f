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

#include <cstddef>
#include <span>
#include <vector>

#include "uqram/errors.hpp"
#include "uqram/types.hpp"

namespace uqram {

// Square complex matrix tagged with an ordered list of subsystem
// dimensions. Invariants: the matrix is square, the dims product equals
// the side length, and every dims entry is >= 2 (or the list is the
// singleton [1] for scalars).
class DenseOperator {
 public:
  // Scalar zero.
  DenseOperator();
  DenseOperator(Matrix entries, Dims dims);

  static DenseOperator identity(Dims dims);
  static DenseOperator zero(Dims dims);
  static DenseOperator scalar(Complex value);
  // Rank-one projector |psi><psi| onto a (normalized) column vector.
  static DenseOperator from_vector(const Vector& psi, Dims dims);
  // Computational-basis projector |label><label|.
  static DenseOperator basis_state(Dims dims, Index label);

  const Matrix& matrix() const { return entries_; }
  const Dims& dims() const { return dims_; }
  Index dim() const { return entries_.rows(); }
  std::size_t subsystem_count() const { return dims_.size(); }

  DenseOperator adjoint() const;
  Complex trace() const { return entries_.trace(); }
  double max_abs() const;
  // Max-abs entry of the anti-Hermitian part (X - X')/2.
  double hermiticity_deviation() const;
  bool is_hermitian(double tolerance) const;

 private:
  Matrix entries_;
  Dims dims_;
};

bool same_dims(const DenseOperator& a, const DenseOperator& b);

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator-(const DenseOperator& a);
DenseOperator operator*(Complex scale, const DenseOperator& a);
DenseOperator operator*(double scale, const DenseOperator& a);
// Matrix product; both factors must carry identical dims.
DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);

// Tensor (Kronecker) product of the factors in order. The result dims are
// the concatenated factor dims with unit entries dropped.
DenseOperator kron(std::span<const DenseOperator> factors);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b,
                   const DenseOperator& c);

// Traces out every subsystem not listed in `keep`. The kept subsystems
// stay in their original relative order; trace is preserved.
DenseOperator partial_trace(const DenseOperator& op,
                            const std::vector<std::size_t>& keep);

// Reorders subsystems: output factor k is input factor perm[k].
DenseOperator permute_subsystems(const DenseOperator& op,
                                 const std::vector<std::size_t>& perm);

// u x u' for same-dims operands.
DenseOperator unitary_conjugate(const DenseOperator& u, const DenseOperator& x);

struct EigenDecomposition {
  // Real eigenvalues in descending order; eigenvectors_ column k pairs
  // with eigenvalues[k].
  RealVector eigenvalues;
  Matrix eigenvectors;
};

// Eigendecomposition of the symmetrized operator (X + X')/2. Inputs whose
// anti-Hermitian part exceeds tol::kHermitian in max-abs are rejected.
EigenDecomposition hermitian_eig(const DenseOperator& op);

// Sum of absolute eigenvalues of a Hermitian operator.
double trace_norm(const DenseOperator& op);

// Projector onto the span of eigenvectors with eigenvalue > tolerance.
// Eigenvalues within [-tolerance, tolerance] go to the complement.
DenseOperator positive_part_projector(const DenseOperator& op,
                                      double tolerance = tol::kPositivePart);

// Hermitian pseudo-inverse square root; eigenvalues at or below `cutoff`
// are treated as kernel and map to zero.
DenseOperator pseudo_inverse_sqrt(const DenseOperator& op, double cutoff);

struct StateValidity {
  double hermiticity_deviation = 0.0;
  double trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Density-operator validity report: passes iff the Hermiticity deviation
// and |trace - 1| are within `tolerance` and the most negative eigenvalue
// is >= -tolerance. Never throws on numeric grounds.
StateValidity validate_state(const DenseOperator& op,
                             double tolerance = tol::kState);

}  // namespace uqram
