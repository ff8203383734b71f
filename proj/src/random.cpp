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

#include "uqram/random.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace uqram {

double SeededRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t SeededRng::uniform_index(std::size_t bound) {
  if (bound == 0) {
    throw ArgumentError("uniform_index: bound must be positive");
  }
  auto index = static_cast<std::size_t>(uniform() * static_cast<double>(bound));
  return index >= bound ? bound - 1 : index;
}

Complex SeededRng::complex_normal() {
  double re = normal();
  double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

Matrix ginibre_matrix(SeededRng& rng, Index rows, Index cols) {
  if (rows < 1 || cols < 1) {
    throw ArgumentError("ginibre_matrix: dimensions must be positive");
  }
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      g(i, j) = rng.complex_normal();
    }
  }
  return g;
}

DenseOperator random_pure_state(SeededRng& rng, Dims dims) {
  Index d = dims_product(dims);
  Vector psi = ginibre_matrix(rng, d, 1).col(0);
  psi.normalize();
  return DenseOperator::from_vector(psi, std::move(dims));
}

DenseOperator random_density_operator(SeededRng& rng, Dims dims, Index rank) {
  Index d = dims_product(dims);
  if (rank < 1 || rank > d) {
    throw ArgumentError("random_density_operator: rank must be in [1, dim]");
  }
  Matrix g = ginibre_matrix(rng, d, rank);
  Matrix rho = g * g.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return DenseOperator(std::move(rho), std::move(dims));
}

std::vector<double> random_distribution(SeededRng& rng, std::size_t size) {
  if (size == 0) {
    throw ArgumentError("random_distribution: size must be positive");
  }
  std::vector<double> weights(size);
  double sum = 0.0;
  for (double& w : weights) {
    double u = rng.uniform();
    if (u < 0x1.0p-53) u = 0x1.0p-53;
    w = -std::log(u);
    sum += w;
  }
  for (double& w : weights) w /= sum;
  return weights;
}

KrausChannel random_kraus_channel(SeededRng& rng, Dims dims, Index rank,
                                  std::string label) {
  Index d = dims_product(dims);
  if (rank < 1) {
    throw ArgumentError("random_kraus_channel: rank must be positive");
  }
  Matrix g = ginibre_matrix(rng, d * rank, d);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix isometry = qr.householderQ() * Matrix::Identity(d * rank, d);

  KrausChannel channel;
  channel.label = std::move(label);
  channel.operators.reserve(static_cast<std::size_t>(rank));
  for (Index block = 0; block < rank; ++block) {
    channel.operators.emplace_back(isometry.middleRows(block * d, d), dims);
  }
  return channel;
}

Povm random_povm(SeededRng& rng, Dims dims, std::size_t outcomes) {
  if (outcomes == 0) {
    throw ArgumentError("random_povm: need at least one outcome");
  }
  Index d = dims_product(dims);
  std::vector<Matrix> raw;
  raw.reserve(outcomes);
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < outcomes; ++i) {
    Matrix g = ginibre_matrix(rng, d, d);
    Matrix e = g * g.adjoint();
    e = 0.5 * (e + e.adjoint()).eval();
    sum += e;
    raw.push_back(std::move(e));
  }
  DenseOperator total(sum, dims);
  DenseOperator whitener =
      pseudo_inverse_sqrt(total, tol::kPseudoInverseCutoff);
  DenseOperator support =
      positive_part_projector(total, tol::kPseudoInverseCutoff);

  Povm povm;
  povm.effects.reserve(outcomes);
  for (std::size_t i = 0; i < outcomes; ++i) {
    Matrix effect = whitener.matrix() * raw[i] * whitener.matrix();
    effect = 0.5 * (effect + effect.adjoint()).eval();
    povm.effects.emplace_back(std::move(effect), dims);
  }
  Matrix residual = Matrix::Identity(d, d) - support.matrix();
  povm.effects[0] =
      DenseOperator(povm.effects[0].matrix() + residual, dims);
  return povm;
}

Protocol random_protocol(SeededRng& rng, std::size_t address_qubits,
                         std::size_t max_queries, Index max_r_dim,
                         Index q_dim) {
  if (max_r_dim < 1) {
    throw ArgumentError("random_protocol: max_r_dim must be positive");
  }
  Index r_dim = 1 + static_cast<Index>(
                        rng.uniform_index(static_cast<std::size_t>(max_r_dim)));
  RegisterLayout layout =
      RegisterLayout::make(address_qubits, r_dim, q_dim);
  Dims s_dims = layout.s_dims();
  DenseOperator initial =
      random_density_operator(rng, s_dims, layout.s_dim());

  std::size_t queries = rng.uniform_index(max_queries + 1);
  std::vector<ProtocolStep> steps;
  for (std::size_t t = 0; t < queries; ++t) {
    steps.emplace_back(QueryStep{});
    Index rank = 1 + static_cast<Index>(rng.uniform_index(2));
    steps.emplace_back(random_kraus_channel(rng, s_dims, rank));
  }
  return Protocol(layout, std::move(initial), std::move(steps));
}

}  // namespace uqram
