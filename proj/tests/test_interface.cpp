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

#include "uqram/interface.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "doctest.h"

#include "uqram/random.hpp"

namespace uqram {
namespace {

Vector minus_state() {
  Vector d(2);
  d << Complex(1.0 / std::sqrt(2.0), 0.0), Complex(-1.0 / std::sqrt(2.0), 0.0);
  return d;
}

Vector plus_state() {
  Vector d(2);
  d << Complex(1.0 / std::sqrt(2.0), 0.0), Complex(1.0 / std::sqrt(2.0), 0.0);
  return d;
}

Vector bell_vector(double sign) {
  Vector psi = Vector::Zero(4);
  psi(0) = Complex(1.0 / std::sqrt(2.0), 0.0);
  psi(3) = Complex(sign / std::sqrt(2.0), 0.0);
  return psi;
}

TEST_CASE("read unitary is the address-controlled xor permutation") {
  DenseOperator u = build_read_unitary(1);
  REQUIRE(u.dim() == 16);
  CHECK(u.dims() == Dims{2, 2, 4});

  // Address 1 under table 01 flips the data qubit: flat index
  // (a=1, y=0, m=1) = 9 maps to (a=1, y=1, m=1) = 13.
  CHECK(u.matrix()(13, 9) == Complex(1.0, 0.0));
  CHECK(u.matrix()(9, 13) == Complex(1.0, 0.0));
  CHECK(u.matrix()(9, 9) == Complex(0.0, 0.0));

  // The all-zero table leaves every column unchanged.
  for (Index a = 0; a < 2; ++a) {
    for (Index y = 0; y < 2; ++y) {
      Index flat = (a * 2 + y) * 4 + 0;
      CHECK(u.matrix()(flat, flat) == Complex(1.0, 0.0));
    }
  }

  // Every column holds exactly one unit entry.
  for (Index col = 0; col < 16; ++col) {
    double sum = 0.0;
    for (Index row = 0; row < 16; ++row) sum += std::abs(u.matrix()(row, col));
    CHECK(std::abs(sum - 1.0) < 1e-15);
  }
}

TEST_CASE("read unitary is unitary and an involution") {
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    DenseOperator u = build_read_unitary(n);
    Matrix gram = u.matrix().adjoint() * u.matrix();
    CHECK((gram - Matrix::Identity(u.dim(), u.dim())).cwiseAbs().maxCoeff() <
          1e-12);
    // Reading twice xors the same bit twice.
    Matrix twice = u.matrix() * u.matrix();
    CHECK((twice - Matrix::Identity(u.dim(), u.dim())).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("read unitary capacity follows the register budget") {
  CHECK_THROWS_AS(build_read_unitary(4), CapacityError);
  CHECK_THROWS_AS(build_read_unitary(2, 10), CapacityError);
  CHECK_NOTHROW(build_read_unitary(2));
  CHECK_THROWS_AS(assemble_read_unitary_from_tables(4), CapacityError);
}

TEST_CASE("direct permutation and per-table assembly agree") {
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    DenseOperator direct = build_read_unitary(n);
    DenseOperator assembled = assemble_read_unitary_from_tables(n);
    CHECK(same_dims(direct, assembled));
    CHECK((direct - assembled).max_abs() < 1e-12);
  }
}

TEST_CASE("per-table unitaries implement the xor action") {
  DenseOperator v00 = build_table_unitary(1, TruthTable::from_string("00"));
  CHECK((v00.matrix() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  Matrix x(2, 2);
  x << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0),
      Complex(0.0, 0.0);
  DenseOperator v11 = build_table_unitary(1, TruthTable::from_string("11"));
  Matrix i2_kron_x =
      Eigen::kroneckerProduct(Matrix::Identity(2, 2), x).eval();
  CHECK((v11.matrix() - i2_kron_x).cwiseAbs().maxCoeff() == 0.0);

  DenseOperator v01 = build_table_unitary(1, TruthTable::from_string("01"));
  Matrix block = Matrix::Zero(4, 4);
  block.block(0, 0, 2, 2) = Matrix::Identity(2, 2);
  block.block(2, 2, 2, 2) = x;
  CHECK((v01.matrix() - block).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(build_table_unitary(1, TruthTable::from_string("0110")),
                  ArgumentError);
  CHECK_THROWS_AS(build_table_unitary(0, TruthTable::from_string("0")),
                  ArgumentError);
}

TEST_CASE("phase oracle applies a sign per marked address") {
  DenseOperator o00 = build_phase_oracle(1, TruthTable::from_string("00"));
  CHECK((o00.matrix() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  DenseOperator o01 = build_phase_oracle(1, TruthTable::from_string("01"));
  CHECK(o01.matrix()(0, 0) == Complex(1.0, 0.0));
  CHECK(o01.matrix()(1, 1) == Complex(-1.0, 0.0));

  DenseOperator o11 = build_phase_oracle(1, TruthTable::from_string("11"));
  CHECK((o11.matrix() + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  // The 01 oracle exchanges the two uniform-superposition states.
  Vector flipped = o01.matrix() * plus_state();
  CHECK((flipped - minus_state()).cwiseAbs().maxCoeff() < 1e-15);

  // A global sign is invisible at the density-operator level.
  DenseOperator psi = DenseOperator::from_vector(plus_state(), {2});
  CHECK((unitary_conjugate(o11, psi) - psi).max_abs() < 1e-15);

  CHECK_THROWS_AS(build_phase_oracle(1, TruthTable::from_string("0")),
                  ArgumentError);
  CHECK_THROWS_AS(build_phase_oracle(0, TruthTable::from_string("0")),
                  ArgumentError);
}

TEST_CASE("data qubit in the odd superposition turns reads into phases") {
  SeededRng rng(23);
  Vector minus = minus_state();
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    const Index a_dim = Index{1} << n;
    for (const TruthTable& table : all_tables(std::size_t{1} << n)) {
      DenseOperator v = build_table_unitary(n, table);
      DenseOperator o = build_phase_oracle(n, table);
      for (int trial = 0; trial < 3; ++trial) {
        Vector psi = ginibre_matrix(rng, a_dim, 1).col(0);
        psi.normalize();
        Vector lhs =
            v.matrix() * Eigen::kroneckerProduct(psi, minus).eval();
        Vector rhs =
            Eigen::kroneckerProduct((o.matrix() * psi).eval(), minus).eval();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("pinch keeps the diagonal and zeroes coherences") {
  DenseOperator bell =
      DenseOperator::from_vector(bell_vector(1.0), {4});
  DenseOperator pinched = pinch(bell);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = Complex(0.5, 0.0);
  expected(3, 3) = Complex(0.5, 0.0);
  CHECK((pinched.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);

  // Diagonal states are fixed points.
  Matrix diag = Matrix::Zero(4, 4);
  diag(0, 0) = Complex(0.25, 0.0);
  diag(1, 1) = Complex(0.75, 0.0);
  DenseOperator fixed(diag, Dims{4});
  CHECK((pinch(fixed) - fixed).max_abs() == 0.0);

  // The uniform superposition over all four tables dephases to the
  // maximally mixed state.
  Vector uniform = Vector::Constant(4, Complex(0.5, 0.0));
  DenseOperator mixed = pinch(DenseOperator::from_vector(uniform, {4}));
  CHECK((mixed.matrix() - 0.25 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-15);

  CHECK_THROWS_AS(pinch(DenseOperator::identity({2, 2})), ArgumentError);
  CHECK_THROWS_AS(pinch(DenseOperator::identity({3})), ArgumentError);
  CHECK_THROWS_AS(pinch(DenseOperator::scalar(Complex(1.0, 0.0))),
                  ArgumentError);
}

TEST_CASE("pinch equals the projector sum and is idempotent") {
  SeededRng rng(24);
  DenseOperator rho = random_density_operator(rng, {4}, 4);

  Matrix projected = Matrix::Zero(4, 4);
  for (Index m = 0; m < 4; ++m) {
    Matrix pi = Matrix::Zero(4, 4);
    pi(m, m) = Complex(1.0, 0.0);
    projected += pi * rho.matrix() * pi;
  }
  DenseOperator pinched = pinch(rho);
  CHECK((pinched.matrix() - projected).cwiseAbs().maxCoeff() < 1e-15);

  CHECK((pinch(pinched) - pinched).max_abs() == 0.0);
  CHECK(std::abs(pinched.trace().real() - 1.0) < 1e-12);
  CHECK(validate_state(pinched).pass);
}

TEST_CASE("pinch with a reference dephases memory blocks only") {
  SeededRng rng(25);
  DenseOperator rho_m = random_density_operator(rng, {4}, 4);
  DenseOperator rho_q = random_density_operator(rng, {2}, 2);
  DenseOperator product = kron(rho_m, rho_q);
  DenseOperator pinched = pinch_with_reference(product);
  CHECK((pinched - kron(pinch(rho_m), rho_q)).max_abs() < 1e-15);

  // Equality with the explicit block projection on an entangled state.
  DenseOperator joint = random_density_operator(rng, {4, 2}, 8);
  Matrix blocks = Matrix::Zero(8, 8);
  for (Index m = 0; m < 4; ++m) {
    Matrix pi = Matrix::Zero(8, 8);
    pi.block(2 * m, 2 * m, 2, 2) = Matrix::Identity(2, 2);
    blocks += pi * joint.matrix() * pi;
  }
  DenseOperator block_pinched = pinch_with_reference(joint);
  CHECK((block_pinched.matrix() - blocks).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((pinch_with_reference(block_pinched) - block_pinched).max_abs() ==
        0.0);

  // Discarding the reference commutes with the dephasing.
  DenseOperator reduced_then_pinched = pinch(partial_trace(joint, {0}));
  DenseOperator pinched_then_reduced = partial_trace(block_pinched, {0});
  CHECK((reduced_then_pinched - pinched_then_reduced).max_abs() < 1e-14);

  // A memory-only state passes through the same dephasing.
  CHECK((pinch_with_reference(rho_m) - pinch(rho_m)).max_abs() == 0.0);

  CHECK_THROWS_AS(pinch_with_reference(DenseOperator::identity({2, 2, 2})),
                  ArgumentError);
  CHECK_THROWS_AS(pinch_with_reference(DenseOperator::identity({3, 2})),
                  ArgumentError);
}

TEST_CASE("dephasing a middle factor masks the matching labels") {
  SeededRng rng(26);
  DenseOperator op(ginibre_matrix(rng, 12, 12), Dims{2, 3, 2});
  DenseOperator masked = dephase_subsystem(op, 1);
  for (Index i = 0; i < 12; ++i) {
    for (Index j = 0; j < 12; ++j) {
      Index label_i = (i / 2) % 3;
      Index label_j = (j / 2) % 3;
      Complex expected =
          label_i == label_j ? op.matrix()(i, j) : Complex(0.0, 0.0);
      CHECK(std::abs(masked.matrix()(i, j) - expected) == 0.0);
    }
  }
  CHECK_THROWS_AS(dephase_subsystem(op, 3), ArgumentError);
}

TEST_CASE("memory dephasing commutes with the read unitary") {
  SeededRng rng(27);
  DenseOperator u = build_read_unitary(1);
  // Arbitrary (not necessarily positive) operator on the joint space.
  DenseOperator x(ginibre_matrix(rng, 16, 16), Dims{2, 2, 4});
  DenseOperator lhs = dephase_subsystem(unitary_conjugate(u, x), 2);
  DenseOperator rhs = unitary_conjugate(u, dephase_subsystem(x, 2));
  CHECK((lhs - rhs).max_abs() < 1e-10);
}

TEST_CASE("diagonal distribution reads the truth-table weights") {
  DenseOperator plus = DenseOperator::from_vector(bell_vector(1.0), {4});
  DenseOperator minus = DenseOperator::from_vector(bell_vector(-1.0), {4});
  std::vector<double> p_plus = diagonal_distribution(plus);
  std::vector<double> p_minus = diagonal_distribution(minus);
  REQUIRE(p_plus.size() == 4);
  CHECK(std::abs(p_plus[0] - 0.5) < 1e-15);
  CHECK(p_plus[1] == 0.0);
  CHECK(p_plus[2] == 0.0);
  CHECK(std::abs(p_plus[3] - 0.5) < 1e-15);
  // The sign flip is invisible on the diagonal.
  for (std::size_t m = 0; m < 4; ++m) {
    CHECK(p_plus[m] == p_minus[m]);
  }

  std::vector<double> point =
      diagonal_distribution(DenseOperator::basis_state({4}, 1));
  CHECK(point == std::vector<double>{0.0, 1.0, 0.0, 0.0});

  SeededRng rng(28);
  DenseOperator rho = random_density_operator(rng, {8}, 8);
  std::vector<double> p = diagonal_distribution(rho);
  double sum = 0.0;
  for (double v : p) {
    CHECK(v >= 0.0);
    sum += v;
  }
  CHECK(std::abs(sum - 1.0) < 1e-12);
  // Dephasing never changes the diagonal.
  CHECK(diagonal_distribution(pinch(rho)) == p);

  CHECK_THROWS_AS(diagonal_distribution(2.0 * rho), StateError);
  CHECK_THROWS_AS(diagonal_distribution(DenseOperator::identity({3})),
                  ArgumentError);
  CHECK_THROWS_AS(diagonal_distribution(DenseOperator::identity({2, 2})),
                  ArgumentError);
}

}  // namespace
}  // namespace uqram
