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

#include "uqram/dense_operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

namespace uqram {

namespace {

void check_dims_list(const Dims& dims, Index side) {
  if (dims.empty()) {
    throw ArgumentError("dense operator: dims list is empty");
  }
  if (dims.size() == 1 && dims[0] == 1) {
    if (side != 1) {
      throw ArgumentError("dense operator: scalar dims [1] on a matrix of side " +
                          std::to_string(side));
    }
    return;
  }
  for (Index d : dims) {
    if (d < 2) {
      throw ArgumentError("dense operator: dims entries must be >= 2 (or the singleton [1])");
    }
  }
  if (dims_product(dims) != side) {
    throw ArgumentError("dense operator: dims product " +
                        std::to_string(dims_product(dims)) +
                        " does not match matrix side " + std::to_string(side));
  }
}

// Strides of a mixed-radix index with the leftmost factor most significant.
std::vector<Index> factor_strides(const Dims& dims) {
  std::vector<Index> stride(dims.size());
  Index acc = 1;
  for (std::size_t i = dims.size(); i-- > 0;) {
    stride[i] = acc;
    acc *= dims[i];
  }
  return stride;
}

Dims canonical_dims(Dims dims) {
  Dims out;
  for (Index d : dims) {
    if (d != 1) out.push_back(d);
  }
  if (out.empty()) out.push_back(1);
  return out;
}

}  // namespace

DenseOperator::DenseOperator() : entries_(Matrix::Zero(1, 1)), dims_{1} {}

DenseOperator::DenseOperator(Matrix entries, Dims dims)
    : entries_(std::move(entries)), dims_(std::move(dims)) {
  if (entries_.rows() != entries_.cols()) {
    throw ArgumentError("dense operator: matrix is not square (" +
                        std::to_string(entries_.rows()) + "x" +
                        std::to_string(entries_.cols()) + ")");
  }
  check_dims_list(dims_, entries_.rows());
}

DenseOperator DenseOperator::identity(Dims dims) {
  Index d = dims_product(dims);
  return DenseOperator(Matrix::Identity(d, d), std::move(dims));
}

DenseOperator DenseOperator::zero(Dims dims) {
  Index d = dims_product(dims);
  return DenseOperator(Matrix::Zero(d, d), std::move(dims));
}

DenseOperator DenseOperator::scalar(Complex value) {
  Matrix m(1, 1);
  m(0, 0) = value;
  return DenseOperator(std::move(m), Dims{1});
}

DenseOperator DenseOperator::from_vector(const Vector& psi, Dims dims) {
  if (psi.size() != dims_product(dims)) {
    throw ArgumentError("from_vector: vector length does not match dims product");
  }
  return DenseOperator(psi * psi.adjoint(), std::move(dims));
}

DenseOperator DenseOperator::basis_state(Dims dims, Index label) {
  Index d = dims_product(dims);
  if (label < 0 || label >= d) {
    throw ArgumentError("basis_state: label " + std::to_string(label) +
                        " out of range for dimension " + std::to_string(d));
  }
  Matrix m = Matrix::Zero(d, d);
  m(label, label) = Complex(1.0, 0.0);
  return DenseOperator(std::move(m), std::move(dims));
}

DenseOperator DenseOperator::adjoint() const {
  return DenseOperator(entries_.adjoint(), dims_);
}

double DenseOperator::max_abs() const { return entries_.cwiseAbs().maxCoeff(); }

double DenseOperator::hermiticity_deviation() const {
  Matrix anti = 0.5 * (entries_ - entries_.adjoint());
  return anti.cwiseAbs().maxCoeff();
}

bool DenseOperator::is_hermitian(double tolerance) const {
  return hermiticity_deviation() <= tolerance;
}

bool same_dims(const DenseOperator& a, const DenseOperator& b) {
  return a.dims() == b.dims();
}

namespace {

void require_same_dims(const DenseOperator& a, const DenseOperator& b,
                       const char* what) {
  if (!same_dims(a, b)) {
    throw ArgumentError(std::string(what) + ": operands carry different dims");
  }
}

}  // namespace

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  require_same_dims(a, b, "operator+");
  return DenseOperator(a.matrix() + b.matrix(), a.dims());
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  require_same_dims(a, b, "operator-");
  return DenseOperator(a.matrix() - b.matrix(), a.dims());
}

DenseOperator operator-(const DenseOperator& a) {
  return DenseOperator(-a.matrix(), a.dims());
}

DenseOperator operator*(Complex scale, const DenseOperator& a) {
  return DenseOperator(scale * a.matrix(), a.dims());
}

DenseOperator operator*(double scale, const DenseOperator& a) {
  return Complex(scale, 0.0) * a;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  require_same_dims(a, b, "operator*");
  return DenseOperator(a.matrix() * b.matrix(), a.dims());
}

DenseOperator kron(std::span<const DenseOperator> factors) {
  if (factors.empty()) {
    throw ArgumentError("kron: factor list is empty");
  }
  Matrix result = factors[0].matrix();
  Dims dims = factors[0].dims();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    result = Eigen::kroneckerProduct(result, factors[i].matrix()).eval();
    const Dims& extra = factors[i].dims();
    dims.insert(dims.end(), extra.begin(), extra.end());
  }
  return DenseOperator(std::move(result), canonical_dims(std::move(dims)));
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  const DenseOperator factors[] = {a, b};
  return kron(std::span<const DenseOperator>(factors));
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b,
                   const DenseOperator& c) {
  const DenseOperator factors[] = {a, b, c};
  return kron(std::span<const DenseOperator>(factors));
}

DenseOperator partial_trace(const DenseOperator& op,
                            const std::vector<std::size_t>& keep) {
  const Dims& dims = op.dims();
  const std::size_t count = dims.size();
  std::vector<std::size_t> kept(keep);
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw ArgumentError("partial_trace: repeated subsystem index");
  }
  for (std::size_t k : kept) {
    if (k >= count) {
      throw ArgumentError("partial_trace: subsystem index " + std::to_string(k) +
                          " out of range for " + std::to_string(count) +
                          " subsystems");
    }
  }
  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);
  }

  const std::vector<Index> stride = factor_strides(dims);
  Index kept_dim = 1;
  for (std::size_t k : kept) kept_dim *= dims[k];
  Index traced_dim = 1;
  for (std::size_t t : traced) traced_dim *= dims[t];

  // Flat offsets contributed by every assignment of the traced labels.
  std::vector<Index> traced_offsets(static_cast<std::size_t>(traced_dim), 0);
  for (Index s = 0; s < traced_dim; ++s) {
    Index rem = s;
    Index offset = 0;
    for (std::size_t j = traced.size(); j-- > 0;) {
      Index d = dims[traced[j]];
      offset += (rem % d) * stride[traced[j]];
      rem /= d;
    }
    traced_offsets[static_cast<std::size_t>(s)] = offset;
  }
  std::vector<Index> kept_offsets(static_cast<std::size_t>(kept_dim), 0);
  for (Index r = 0; r < kept_dim; ++r) {
    Index rem = r;
    Index offset = 0;
    for (std::size_t j = kept.size(); j-- > 0;) {
      Index d = dims[kept[j]];
      offset += (rem % d) * stride[kept[j]];
      rem /= d;
    }
    kept_offsets[static_cast<std::size_t>(r)] = offset;
  }

  const Matrix& in = op.matrix();
  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (Index r = 0; r < kept_dim; ++r) {
    for (Index c = 0; c < kept_dim; ++c) {
      Complex acc(0.0, 0.0);
      for (Index s = 0; s < traced_dim; ++s) {
        Index shift = traced_offsets[static_cast<std::size_t>(s)];
        acc += in(kept_offsets[static_cast<std::size_t>(r)] + shift,
                  kept_offsets[static_cast<std::size_t>(c)] + shift);
      }
      out(r, c) = acc;
    }
  }

  Dims out_dims;
  for (std::size_t k : kept) out_dims.push_back(dims[k]);
  if (out_dims.empty()) out_dims.push_back(1);
  return DenseOperator(std::move(out), std::move(out_dims));
}

DenseOperator permute_subsystems(const DenseOperator& op,
                                 const std::vector<std::size_t>& perm) {
  const Dims& dims = op.dims();
  const std::size_t count = dims.size();
  if (perm.size() != count) {
    throw ArgumentError("permute_subsystems: permutation length mismatch");
  }
  std::vector<bool> seen(count, false);
  for (std::size_t p : perm) {
    if (p >= count || seen[p]) {
      throw ArgumentError("permute_subsystems: not a permutation");
    }
    seen[p] = true;
  }

  Dims out_dims(count);
  for (std::size_t k = 0; k < count; ++k) out_dims[k] = dims[perm[k]];
  const std::vector<Index> in_stride = factor_strides(dims);
  const Index total = op.dim();

  // map[new_index] = old_index under the factor reordering.
  std::vector<Index> map(static_cast<std::size_t>(total), 0);
  for (Index idx = 0; idx < total; ++idx) {
    Index rem = idx;
    Index old = 0;
    for (std::size_t k = count; k-- > 0;) {
      Index d = out_dims[k];
      old += (rem % d) * in_stride[perm[k]];
      rem /= d;
    }
    map[static_cast<std::size_t>(idx)] = old;
  }

  const Matrix& in = op.matrix();
  Matrix out(total, total);
  for (Index i = 0; i < total; ++i) {
    for (Index j = 0; j < total; ++j) {
      out(i, j) = in(map[static_cast<std::size_t>(i)],
                     map[static_cast<std::size_t>(j)]);
    }
  }
  return DenseOperator(std::move(out), std::move(out_dims));
}

DenseOperator unitary_conjugate(const DenseOperator& u, const DenseOperator& x) {
  require_same_dims(u, x, "unitary_conjugate");
  return DenseOperator(u.matrix() * x.matrix() * u.matrix().adjoint(), x.dims());
}

EigenDecomposition hermitian_eig(const DenseOperator& op) {
  double deviation = op.hermiticity_deviation();
  if (deviation > tol::kHermitian) {
    throw ValidationError("hermitian_eig: anti-Hermitian part has max-abs " +
                          std::to_string(deviation) + ", above " +
                          std::to_string(tol::kHermitian));
  }
  Matrix sym = 0.5 * (op.matrix() + op.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver did not converge");
  }
  const Index d = op.dim();
  EigenDecomposition out;
  out.eigenvalues = RealVector(d);
  out.eigenvectors = Matrix(d, d);
  for (Index k = 0; k < d; ++k) {
    out.eigenvalues(k) = solver.eigenvalues()(d - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(d - 1 - k);
  }
  return out;
}

double trace_norm(const DenseOperator& op) {
  EigenDecomposition eig = hermitian_eig(op);
  return eig.eigenvalues.cwiseAbs().sum();
}

DenseOperator positive_part_projector(const DenseOperator& op, double tolerance) {
  EigenDecomposition eig = hermitian_eig(op);
  Index rank = 0;
  while (rank < eig.eigenvalues.size() && eig.eigenvalues(rank) > tolerance) {
    ++rank;
  }
  const Index d = op.dim();
  if (rank == 0) {
    return DenseOperator(Matrix::Zero(d, d), op.dims());
  }
  Matrix basis = eig.eigenvectors.leftCols(rank);
  Matrix proj = basis * basis.adjoint();
  proj = 0.5 * (proj + proj.adjoint()).eval();
  return DenseOperator(std::move(proj), op.dims());
}

DenseOperator pseudo_inverse_sqrt(const DenseOperator& op, double cutoff) {
  EigenDecomposition eig = hermitian_eig(op);
  const Index d = op.dim();
  RealVector inv(d);
  for (Index k = 0; k < d; ++k) {
    double lambda = eig.eigenvalues(k);
    inv(k) = lambda > cutoff ? 1.0 / std::sqrt(lambda) : 0.0;
  }
  Matrix out = eig.eigenvectors * inv.asDiagonal() * eig.eigenvectors.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DenseOperator(std::move(out), op.dims());
}

StateValidity validate_state(const DenseOperator& op, double tolerance) {
  StateValidity report;
  report.tolerance = tolerance;
  report.hermiticity_deviation = op.hermiticity_deviation();
  report.trace_deviation = std::abs(op.trace() - Complex(1.0, 0.0));
  Matrix sym = 0.5 * (op.matrix() + op.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.pass = report.hermiticity_deviation <= tolerance &&
                report.trace_deviation <= tolerance &&
                report.min_eigenvalue >= -tolerance;
  return report;
}

}  // namespace uqram
