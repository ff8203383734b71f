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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uqram/dense_operator.hpp"
#include "uqram/protocol.hpp"

namespace uqram {

// Deterministic random source. All mappings from raw engine words to
// samples are fixed here rather than delegated to std distributions, so a
// seed reproduces the same stream on every platform:
//   uniform: next mt19937_64 word >> 11, scaled by 2^-53, giving [0, 1)
//   normal:  Box-Muller on two uniforms (u clamped away from zero)
//   index:   floor(uniform * bound)
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }
  double uniform();
  double normal();
  std::size_t uniform_index(std::size_t bound);
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
};

// Matrix with independent standard complex Gaussian entries, filled in
// row-major order.
Matrix ginibre_matrix(SeededRng& rng, Index rows, Index cols);

// Haar-distributed pure state |psi><psi|.
DenseOperator random_pure_state(SeededRng& rng, Dims dims);

// Normalized G G' for a d x rank Ginibre block; rank bounds the number of
// nonzero eigenvalues.
DenseOperator random_density_operator(SeededRng& rng, Dims dims, Index rank);

// Dirichlet(1, ..., 1) distribution: normalized exponential samples.
std::vector<double> random_distribution(SeededRng& rng, std::size_t size);

// CPTP channel from a random isometry: QR of a (d*rank) x d Ginibre
// matrix, cut into `rank` Kraus blocks.
KrausChannel random_kraus_channel(SeededRng& rng, Dims dims, Index rank,
                                  std::string label = "random");

// Random POVM: Ginibre-squared effects normalized by the inverse square
// root of their sum; any kernel residual is assigned to outcome 0.
Povm random_povm(SeededRng& rng, Dims dims, std::size_t outcomes);

// Random read-only protocol: a full-rank random initial state, a random
// workspace dimension in [1, max_r_dim], and an alternation of queries
// and random channels with at most max_queries queries.
Protocol random_protocol(SeededRng& rng, std::size_t address_qubits,
                         std::size_t max_queries, Index max_r_dim = 2,
                         Index q_dim = 1);

}  // namespace uqram
