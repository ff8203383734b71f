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

#include <vector>

#include "uqram/dense_operator.hpp"
#include "uqram/protocol.hpp"

namespace uqram {

// Two-hypothesis testing instance: candidate states with prior weights.
struct BinaryHypothesis {
  DenseOperator sigma0;
  DenseOperator sigma1;
  double pi0 = 0.5;
  double pi1 = 0.5;
};

struct DiscriminationResult {
  // Optimal success probability (1 + ||delta||_1) / 2.
  double p_success = 0.0;
  // Helstrom operator pi0*sigma0 - pi1*sigma1.
  DenseOperator delta;
  // Projector onto the positive part of delta; accepting hypothesis 0 on
  // this outcome attains p_success.
  DenseOperator decide0_projector;
  double trace_norm_delta = 0.0;
};

// Optimal binary discrimination of two states under priors.
DiscriminationResult helstrom(const BinaryHypothesis& hypothesis);

// (1/2) ||a - b||_1 for two valid states; clamped into [0, 1].
double trace_distance(const DenseOperator& a, const DenseOperator& b);

// Total variation distance (1/2) sum_m |p0(m) - p1(m)|.
double tv_distance(const std::vector<double>& p0, const std::vector<double>& p1);

// Split of a pair of induced mixtures along the sign of delta = p0 - p1:
// sigma_mix(p0) - sigma_mix(p1) = alpha * (tau_plus - tau_minus), with
// alpha the TV distance and tau+- mixtures of sigma over the conditional
// distributions q+-.
struct TvDecomposition {
  double alpha = 0.0;
  std::vector<double> q_plus;
  std::vector<double> q_minus;
  DenseOperator tau_plus;
  DenseOperator tau_minus;
  // Whether the TV bound on the induced trace distance is tight:
  // (1/2) ||tau+ - tau-||_1 > 1 - tol::kSaturation.
  bool saturated = false;
};

TvDecomposition tv_decomposition(const std::vector<double>& p0,
                                 const std::vector<double>& p1,
                                 const std::vector<DenseOperator>& sigma);

// Success probability sum_i priors[i] * tr(E_i states[i]) of a POVM used
// as a multi-hypothesis decision rule.
double povm_success(const std::vector<DenseOperator>& states,
                    const std::vector<double>& priors, const Povm& povm);

// Pretty-good measurement: E_i = W (priors[i] states[i]) W with W the
// pseudo-inverse square root of the average state. The identity residual
// on the kernel is assigned to outcome 0.
Povm pgm(const std::vector<DenseOperator>& states,
         const std::vector<double>& priors);

}  // namespace uqram
