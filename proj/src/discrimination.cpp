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

#include "uqram/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace uqram {

namespace {

void check_state(const DenseOperator& state, const char* what) {
  StateValidity validity = validate_state(state);
  if (!validity.pass) {
    throw StateError(std::string(what) + ": operand is not a valid state");
  }
}

// Hermitian and positive semidefinite, but not necessarily unit trace.
// pgm accepts sub-normalized operands so that the all-zero average is
// reportable as a degenerate input rather than a per-state failure.
void check_positive_operator(const DenseOperator& op, const char* what) {
  StateValidity validity = validate_state(op);
  if (validity.hermiticity_deviation > validity.tolerance ||
      validity.min_eigenvalue < -validity.tolerance) {
    throw StateError(std::string(what) +
                     ": operand is not positive semidefinite");
  }
}

void check_distribution(const std::vector<double>& p, const char* what) {
  double sum = 0.0;
  for (double value : p) {
    if (value < -tol::kDistribution) {
      throw ValidationError(std::string(what) + ": negative probability");
    }
    sum += value;
  }
  if (std::abs(sum - 1.0) > tol::kDistribution) {
    throw ValidationError(std::string(what) + ": probabilities sum to " +
                          std::to_string(sum) + ", not 1");
  }
}

}  // namespace

DiscriminationResult helstrom(const BinaryHypothesis& hypothesis) {
  if (!same_dims(hypothesis.sigma0, hypothesis.sigma1)) {
    throw ArgumentError("helstrom: hypothesis states disagree on dims");
  }
  if (hypothesis.pi0 < 0.0 || hypothesis.pi1 < 0.0 ||
      std::abs(hypothesis.pi0 + hypothesis.pi1 - 1.0) > tol::kPriors) {
    throw ValidationError("helstrom: priors must be nonnegative and sum to 1");
  }
  check_state(hypothesis.sigma0, "helstrom");
  check_state(hypothesis.sigma1, "helstrom");

  DiscriminationResult result;
  result.delta =
      hypothesis.pi0 * hypothesis.sigma0 - hypothesis.pi1 * hypothesis.sigma1;
  result.trace_norm_delta = trace_norm(result.delta);
  result.p_success = 0.5 * (1.0 + result.trace_norm_delta);
  result.decide0_projector = positive_part_projector(result.delta);
  return result;
}

double trace_distance(const DenseOperator& a, const DenseOperator& b) {
  if (!same_dims(a, b)) {
    throw ArgumentError("trace_distance: operands disagree on dims");
  }
  check_state(a, "trace_distance");
  check_state(b, "trace_distance");
  double distance = 0.5 * trace_norm(a - b);
  return std::clamp(distance, 0.0, 1.0);
}

double tv_distance(const std::vector<double>& p0, const std::vector<double>& p1) {
  if (p0.size() != p1.size()) {
    throw ArgumentError("tv_distance: length mismatch");
  }
  check_distribution(p0, "tv_distance");
  check_distribution(p1, "tv_distance");
  double sum = 0.0;
  for (std::size_t m = 0; m < p0.size(); ++m) {
    sum += std::abs(p0[m] - p1[m]);
  }
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

TvDecomposition tv_decomposition(const std::vector<double>& p0,
                                 const std::vector<double>& p1,
                                 const std::vector<DenseOperator>& sigma) {
  if (p0.size() != p1.size() || p0.size() != sigma.size()) {
    throw ArgumentError("tv_decomposition: length mismatch");
  }
  check_distribution(p0, "tv_decomposition");
  check_distribution(p1, "tv_decomposition");

  TvDecomposition out;
  out.alpha = tv_distance(p0, p1);
  if (out.alpha <= tol::kDegenerateTv) {
    throw DegenerateInputError(
        "tv_decomposition: distributions coincide (TV distance is zero)");
  }
  out.q_plus.resize(p0.size(), 0.0);
  out.q_minus.resize(p0.size(), 0.0);
  for (std::size_t m = 0; m < p0.size(); ++m) {
    double delta = p0[m] - p1[m];
    if (delta > 0.0) {
      out.q_plus[m] = delta / out.alpha;
    } else if (delta < 0.0) {
      out.q_minus[m] = -delta / out.alpha;
    }
  }
  out.tau_plus = mixture_reconstruct(out.q_plus, sigma);
  out.tau_minus = mixture_reconstruct(out.q_minus, sigma);
  out.saturated =
      0.5 * trace_norm(out.tau_plus - out.tau_minus) > 1.0 - tol::kSaturation;
  return out;
}

double povm_success(const std::vector<DenseOperator>& states,
                    const std::vector<double>& priors, const Povm& povm) {
  if (states.size() != priors.size() || states.size() != povm.effects.size()) {
    throw ArgumentError("povm_success: states, priors, and effects must have "
                        "matching counts");
  }
  check_distribution(priors, "povm_success");
  PovmValidity validity = validate_povm(povm);
  if (!validity.pass) {
    throw ValidationError("povm_success: povm fails validity checks");
  }
  double success = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dims() != povm.effects[i].dims()) {
      throw ArgumentError("povm_success: state and effect dims mismatch");
    }
    check_state(states[i], "povm_success");
    success += priors[i] *
               (povm.effects[i].matrix() * states[i].matrix()).trace().real();
  }
  return success;
}

Povm pgm(const std::vector<DenseOperator>& states,
         const std::vector<double>& priors) {
  if (states.size() != priors.size()) {
    throw ArgumentError("pgm: states and priors must have matching counts");
  }
  if (states.empty()) {
    throw ArgumentError("pgm: empty state list");
  }
  check_distribution(priors, "pgm");
  DenseOperator average = DenseOperator::zero(states.front().dims());
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!same_dims(states[i], states.front())) {
      throw ArgumentError("pgm: states disagree on dims");
    }
    check_positive_operator(states[i], "pgm");
    average = average + priors[i] * states[i];
  }
  if (average.max_abs() <= tol::kPseudoInverseCutoff) {
    throw DegenerateInputError("pgm: average state is zero");
  }

  DenseOperator whitener =
      pseudo_inverse_sqrt(average, tol::kPseudoInverseCutoff);
  DenseOperator support =
      positive_part_projector(average, tol::kPseudoInverseCutoff);
  Povm povm;
  povm.effects.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    Matrix effect = whitener.matrix() *
                    (priors[i] * states[i].matrix()) * whitener.matrix();
    effect = 0.5 * (effect + effect.adjoint()).eval();
    povm.effects.emplace_back(std::move(effect), states.front().dims());
  }
  // Residual of the identity outside the support of the average state.
  Matrix residual =
      Matrix::Identity(average.dim(), average.dim()) - support.matrix();
  povm.effects[0] = DenseOperator(povm.effects[0].matrix() + residual,
                                  states.front().dims());
  return povm;
}

}  // namespace uqram
