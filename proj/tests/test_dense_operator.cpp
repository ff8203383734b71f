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

#include <cmath>
#include <vector>

#include "doctest.h"

#include "uqram/random.hpp"

namespace uqram {
namespace {

Matrix random_square(SeededRng& rng, Index d) {
  return ginibre_matrix(rng, d, d);
}

Matrix random_hermitian(SeededRng& rng, Index d) {
  Matrix g = random_square(rng, d);
  return 0.5 * (g + g.adjoint()).eval();
}

// Brute-force reduction over the traced factors of a three-factor
// operator, written with explicit index arithmetic so it shares no code
// with the implementation under test.
Matrix trace_middle_of_three(const Matrix& in, Index d0, Index d1, Index d2) {
  Matrix out = Matrix::Zero(d0 * d2, d0 * d2);
  for (Index a = 0; a < d0; ++a) {
    for (Index ap = 0; ap < d0; ++ap) {
      for (Index c = 0; c < d2; ++c) {
        for (Index cp = 0; cp < d2; ++cp) {
          Complex acc(0.0, 0.0);
          for (Index b = 0; b < d1; ++b) {
            acc += in((a * d1 + b) * d2 + c, (ap * d1 + b) * d2 + cp);
          }
          out(a * d2 + c, ap * d2 + cp) = acc;
        }
      }
    }
  }
  return out;
}

TEST_CASE("construction enforces square matrices and consistent dims") {
  Matrix rect = Matrix::Zero(2, 3);
  CHECK_THROWS_AS(DenseOperator(rect, Dims{2}), ArgumentError);
  Matrix four = Matrix::Identity(4, 4);
  CHECK_THROWS_AS(DenseOperator(four, Dims{2}), ArgumentError);
  CHECK_THROWS_AS(DenseOperator(four, Dims{2, 3}), ArgumentError);
  CHECK_THROWS_AS(DenseOperator(four, Dims{1, 4}), ArgumentError);
  CHECK_THROWS_AS(DenseOperator(four, Dims{}), ArgumentError);
  CHECK_NOTHROW(DenseOperator(four, Dims{2, 2}));
  CHECK_NOTHROW(DenseOperator(four, Dims{4}));

  DenseOperator scalar = DenseOperator::scalar(Complex(2.0, -1.0));
  CHECK(scalar.dim() == 1);
  CHECK(scalar.dims() == Dims{1});
  CHECK(scalar.trace() == Complex(2.0, -1.0));

  DenseOperator zero;
  CHECK(zero.dim() == 1);
  CHECK(zero.max_abs() == 0.0);
}

TEST_CASE("factory helpers build the expected operators") {
  DenseOperator id = DenseOperator::identity({2, 3});
  CHECK(id.dim() == 6);
  CHECK(id.dims() == Dims{2, 3});
  CHECK((id.matrix() - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);

  DenseOperator z = DenseOperator::zero({4});
  CHECK(z.max_abs() == 0.0);

  Vector psi(2);
  psi << Complex(1.0, 0.0), Complex(0.0, 1.0);
  psi.normalize();
  DenseOperator proj = DenseOperator::from_vector(psi, {2});
  CHECK(std::abs(proj.trace().real() - 1.0) < 1e-15);
  CHECK((proj.matrix() * proj.matrix() - proj.matrix()).cwiseAbs().maxCoeff() <
        1e-15);
  CHECK_THROWS_AS(DenseOperator::from_vector(psi, {3}), ArgumentError);

  DenseOperator basis = DenseOperator::basis_state({2, 2}, 3);
  CHECK(basis.matrix()(3, 3) == Complex(1.0, 0.0));
  CHECK(std::abs(basis.trace().real() - 1.0) == 0.0);
  CHECK_THROWS_AS(DenseOperator::basis_state({2}, 2), ArgumentError);
  CHECK_THROWS_AS(DenseOperator::basis_state({2}, -1), ArgumentError);
}

TEST_CASE("arithmetic requires matching dims and acts entrywise") {
  SeededRng rng(11);
  DenseOperator a(random_square(rng, 4), Dims{2, 2});
  DenseOperator b(random_square(rng, 4), Dims{2, 2});
  DenseOperator c(random_square(rng, 4), Dims{4});

  CHECK_THROWS_AS(a + c, ArgumentError);
  CHECK_THROWS_AS(a - c, ArgumentError);
  CHECK_THROWS_AS(a * c, ArgumentError);

  CHECK(((a + b).matrix() - (a.matrix() + b.matrix())).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(((a - b).matrix() - (a.matrix() - b.matrix())).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(((a * b).matrix() - (a.matrix() * b.matrix())).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(((-a).matrix() + a.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(((2.0 * a).matrix() - 2.0 * a.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.adjoint().matrix() - a.matrix().adjoint()).cwiseAbs().maxCoeff() ==
        0.0);

  DenseOperator h(random_hermitian(rng, 4), Dims{4});
  CHECK(h.is_hermitian(1e-14));
  CHECK(h.hermiticity_deviation() <= 1e-15);
  CHECK_FALSE(a.is_hermitian(1e-14));
}

TEST_CASE("kron matches the entrywise product formula") {
  SeededRng rng(12);
  const Index da = 2;
  const Index db = 3;
  DenseOperator a(random_square(rng, da), Dims{da});
  DenseOperator b(random_square(rng, db), Dims{db});
  DenseOperator ab = kron(a, b);
  REQUIRE(ab.dim() == da * db);
  CHECK(ab.dims() == Dims{da, db});
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      for (Index k = 0; k < db; ++k) {
        for (Index l = 0; l < db; ++l) {
          Complex expected = a.matrix()(i, j) * b.matrix()(k, l);
          CHECK(std::abs(ab.matrix()(i * db + k, j * db + l) - expected) ==
                0.0);
        }
      }
    }
  }
}

TEST_CASE("kron concatenates dims and drops unit factors") {
  DenseOperator a = DenseOperator::identity({2});
  DenseOperator b = DenseOperator::identity({3});
  DenseOperator c = DenseOperator::identity({2, 2});
  CHECK(kron(a, b, c).dims() == Dims{2, 3, 2, 2});

  DenseOperator s = DenseOperator::scalar(Complex(2.0, 0.0));
  DenseOperator scaled = kron(s, a);
  CHECK(scaled.dims() == Dims{2});
  CHECK((scaled.matrix() - 2.0 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(kron(s, s).dims() == Dims{1});

  std::vector<DenseOperator> empty;
  CHECK_THROWS_AS(kron(std::span<const DenseOperator>(empty)), ArgumentError);
}

TEST_CASE("partial trace agrees with the brute-force index reduction") {
  SeededRng rng(13);
  const Index d0 = 2;
  const Index d1 = 3;
  const Index d2 = 2;
  DenseOperator op(random_square(rng, d0 * d1 * d2), Dims{d0, d1, d2});

  DenseOperator reduced = partial_trace(op, {0, 2});
  Matrix oracle = trace_middle_of_three(op.matrix(), d0, d1, d2);
  CHECK(reduced.dims() == Dims{d0, d2});
  CHECK((reduced.matrix() - oracle).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace of a product recovers the factors") {
  SeededRng rng(14);
  DenseOperator rho = random_density_operator(rng, {2}, 2);
  DenseOperator sigma = random_density_operator(rng, {3}, 3);
  DenseOperator joint = kron(rho, sigma);

  DenseOperator left = partial_trace(joint, {0});
  CHECK(left.dims() == Dims{2});
  CHECK((left.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-14);

  DenseOperator right = partial_trace(joint, {1});
  CHECK((right.matrix() - sigma.matrix()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace preserves the trace and handles edge selections") {
  SeededRng rng(15);
  DenseOperator op(random_square(rng, 8), Dims{2, 2, 2});
  DenseOperator all = partial_trace(op, {0, 1, 2});
  CHECK((all.matrix() - op.matrix()).cwiseAbs().maxCoeff() == 0.0);

  DenseOperator none = partial_trace(op, {});
  CHECK(none.dim() == 1);
  CHECK(std::abs(none.trace() - op.trace()) < 1e-14);

  DenseOperator some = partial_trace(op, {1});
  CHECK(std::abs(some.trace() - op.trace()) < 1e-14);

  CHECK_THROWS_AS(partial_trace(op, {0, 0}), ArgumentError);
  CHECK_THROWS_AS(partial_trace(op, {3}), ArgumentError);
}

TEST_CASE("subsystem permutation swaps tensor factors") {
  SeededRng rng(16);
  DenseOperator a(random_square(rng, 2), Dims{2});
  DenseOperator b(random_square(rng, 3), Dims{3});
  DenseOperator ab = kron(a, b);
  DenseOperator swapped = permute_subsystems(ab, {1, 0});
  CHECK(swapped.dims() == Dims{3, 2});
  CHECK((swapped.matrix() - kron(b, a).matrix()).cwiseAbs().maxCoeff() == 0.0);

  // A permutation followed by its inverse restores the input.
  DenseOperator op(random_square(rng, 12), Dims{2, 3, 2});
  std::vector<std::size_t> forward{2, 0, 1};
  std::vector<std::size_t> inverse{1, 2, 0};
  DenseOperator round =
      permute_subsystems(permute_subsystems(op, forward), inverse);
  CHECK(round.dims() == op.dims());
  CHECK((round.matrix() - op.matrix()).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(permute_subsystems(op, {0, 1}), ArgumentError);
  CHECK_THROWS_AS(permute_subsystems(op, {0, 1, 1}), ArgumentError);
  CHECK_THROWS_AS(permute_subsystems(op, {0, 1, 3}), ArgumentError);
}

TEST_CASE("unitary conjugation maps basis projectors as expected") {
  Matrix x(2, 2);
  x << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0),
      Complex(0.0, 0.0);
  DenseOperator flip(x, Dims{2});
  DenseOperator zero = DenseOperator::basis_state({2}, 0);
  DenseOperator one = DenseOperator::basis_state({2}, 1);
  DenseOperator conj = unitary_conjugate(flip, zero);
  CHECK((conj.matrix() - one.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(unitary_conjugate(flip, DenseOperator::identity({4})),
                  ArgumentError);
}

TEST_CASE("hermitian eigendecomposition reconstructs and orders") {
  SeededRng rng(17);
  DenseOperator h(random_hermitian(rng, 5), Dims{5});
  EigenDecomposition eig = hermitian_eig(h);
  REQUIRE(eig.eigenvalues.size() == 5);
  for (Index k = 0; k + 1 < 5; ++k) {
    CHECK(eig.eigenvalues(k) >= eig.eigenvalues(k + 1));
  }
  Matrix rebuilt = eig.eigenvectors * eig.eigenvalues.asDiagonal() *
                   eig.eigenvectors.adjoint();
  CHECK((rebuilt - h.matrix()).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors -
         Matrix::Identity(5, 5))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("hermitian eigendecomposition rejects non-Hermitian input") {
  Matrix bad(2, 2);
  bad << Complex(0.0, 0.0), Complex(0.0, 1.0), Complex(0.0, 1.0),
      Complex(0.0, 0.0);
  CHECK_THROWS_AS(hermitian_eig(DenseOperator(bad, Dims{2})), ValidationError);

  // A tiny anti-Hermitian perturbation is symmetrized away.
  Matrix near = Matrix::Identity(2, 2);
  near(0, 1) = Complex(0.0, 1e-12);
  EigenDecomposition eig = hermitian_eig(DenseOperator(near, Dims{2}));
  CHECK(std::abs(eig.eigenvalues(0) - 1.0) < 1e-9);
}

TEST_CASE("trace norm sums absolute eigenvalues") {
  Matrix half(2, 2);
  half << Complex(0.5, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
      Complex(-0.5, 0.0);
  CHECK(std::abs(trace_norm(DenseOperator(half, Dims{2})) - 1.0) < 1e-12);

  DenseOperator zero = DenseOperator::basis_state({2}, 0);
  DenseOperator one = DenseOperator::basis_state({2}, 1);
  CHECK(std::abs(trace_norm(zero - one) - 2.0) < 1e-12);
  CHECK(trace_norm(DenseOperator::zero({3})) == 0.0);
}

TEST_CASE("positive part projector keeps strictly positive eigenspaces") {
  Matrix mixed(2, 2);
  mixed << Complex(0.4, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
      Complex(-0.6, 0.0);
  DenseOperator proj = positive_part_projector(DenseOperator(mixed, Dims{2}));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = Complex(1.0, 0.0);
  CHECK((proj.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);

  // Eigenvalues at the threshold fall to the complement.
  Matrix tie(2, 2);
  tie << Complex(1e-12, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
      Complex(1.0, 0.0);
  DenseOperator tied = positive_part_projector(DenseOperator(tie, Dims{2}));
  Matrix keep_large = Matrix::Zero(2, 2);
  keep_large(1, 1) = Complex(1.0, 0.0);
  CHECK((tied.matrix() - keep_large).cwiseAbs().maxCoeff() < 1e-12);

  DenseOperator none =
      positive_part_projector(-1.0 * DenseOperator::identity({2}));
  CHECK(none.max_abs() == 0.0);

  SeededRng rng(18);
  DenseOperator h(random_hermitian(rng, 4), Dims{4});
  DenseOperator p = positive_part_projector(h);
  CHECK((p.matrix() * p.matrix() - p.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(p.hermiticity_deviation() < 1e-14);
  // tr(P h) equals the sum of positive eigenvalues, the maximum of
  // tr(X h) over 0 <= X <= 1.
  EigenDecomposition eig = hermitian_eig(h);
  double positive_sum = 0.0;
  for (Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues(k) > 0.0) positive_sum += eig.eigenvalues(k);
  }
  CHECK(std::abs((p.matrix() * h.matrix()).trace().real() - positive_sum) <
        1e-12);
}

TEST_CASE("pseudo-inverse square root inverts above the cutoff") {
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = Complex(4.0, 0.0);
  diag(1, 1) = Complex(1e-13, 0.0);
  DenseOperator op(diag, Dims{2});
  DenseOperator w = pseudo_inverse_sqrt(op, 1e-10);
  CHECK(std::abs(w.matrix()(0, 0).real() - 0.5) < 1e-12);
  CHECK(std::abs(w.matrix()(1, 1)) == 0.0);

  // w a w equals the projector onto the retained eigenspaces.
  SeededRng rng(19);
  DenseOperator rho = random_density_operator(rng, {4}, 2);
  DenseOperator whitener = pseudo_inverse_sqrt(rho, 1e-10);
  DenseOperator support = positive_part_projector(rho, 1e-10);
  Matrix whitened = whitener.matrix() * rho.matrix() * whitener.matrix();
  CHECK((whitened - support.matrix()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("state validation reports deviations without throwing") {
  SeededRng rng(20);
  DenseOperator good = random_density_operator(rng, {4}, 4);
  StateValidity ok = validate_state(good);
  CHECK(ok.pass);
  CHECK(ok.hermiticity_deviation <= 1e-12);
  CHECK(ok.trace_deviation <= 1e-12);
  CHECK(ok.min_eigenvalue >= -1e-12);
  CHECK(ok.tolerance == tol::kState);

  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = Complex(1.5, 0.0);
  negative(1, 1) = Complex(-0.5, 0.0);
  StateValidity neg = validate_state(DenseOperator(negative, Dims{2}));
  CHECK_FALSE(neg.pass);
  CHECK(neg.trace_deviation <= 1e-12);
  CHECK(neg.min_eigenvalue < -0.4);

  StateValidity off = validate_state(2.0 * good);
  CHECK_FALSE(off.pass);
  CHECK(off.trace_deviation > 0.9);

  Matrix skew(2, 2);
  skew << Complex(0.5, 0.0), Complex(0.1, 0.0), Complex(0.3, 0.0),
      Complex(0.5, 0.0);
  StateValidity herm = validate_state(DenseOperator(skew, Dims{2}));
  CHECK_FALSE(herm.pass);
  CHECK(herm.hermiticity_deviation > 0.09);
}

}  // namespace
}  // namespace uqram
