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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uqram/dense_operator.hpp"
#include "uqram/registers.hpp"

namespace uqram {

// Completely positive trace-preserving map given by Kraus operators, all
// acting on the same system.
struct KrausChannel {
  std::vector<DenseOperator> operators;
  std::string label;
};

struct ChannelValidity {
  double completeness_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Checks sum K'K = 1 within tol::kChannel. Throws ArgumentError when the
// operator list is empty or the operators disagree on dims.
ChannelValidity validate_channel(const KrausChannel& channel);

struct Povm {
  std::vector<DenseOperator> effects;
};

struct PovmValidity {
  double hermiticity_deviation = 0.0;
  double min_effect_eigenvalue = 0.0;
  double closure_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Checks each effect is PSD within tol::kPovm and the effects sum to the
// identity within tol::kPovm.
PovmValidity validate_povm(const Povm& povm);

// One oracle invocation of the read unitary, extended by the identity on
// the workspace and reference registers.
struct QueryStep {};

using ProtocolStep = std::variant<QueryStep, KrausChannel>;

// A read-only interaction with the memory: an initial state on
// S = A (x) D (x) R, a sequence of queries and channels on S, and an
// optional final POVM on S. No step ever acts on M or Q. All numeric
// payloads are validated at construction.
class Protocol {
 public:
  Protocol(RegisterLayout layout, DenseOperator initial_state,
           std::vector<ProtocolStep> steps,
           std::optional<Povm> final_povm = std::nullopt);

  const RegisterLayout& layout() const { return layout_; }
  const DenseOperator& initial_state() const { return initial_state_; }
  const std::vector<ProtocolStep>& steps() const { return steps_; }
  const std::optional<Povm>& final_povm() const { return final_povm_; }
  std::size_t query_count() const;

 private:
  RegisterLayout layout_;
  DenseOperator initial_state_;
  std::vector<ProtocolStep> steps_;
  std::optional<Povm> final_povm_;
};

// Induced output on S (or S (x) Q when the layout carries a reference):
// prepares rho_S (x) rho_M, applies the steps, traces out M.
DenseOperator run_protocol(const Protocol& protocol, const DenseOperator& rho_m);

// Same pipeline with a joint memory-reference input on M (x) Q; the
// reference is carried through untouched and kept in the output.
DenseOperator run_protocol_with_reference(const Protocol& protocol,
                                          const DenseOperator& rho_mq);

// Output for every deterministic truth table |m><m|, in label order.
std::vector<DenseOperator> basis_outputs(const Protocol& protocol);

// Convex combination sum_m distribution[m] * sigma[m].
DenseOperator mixture_reconstruct(const std::vector<double>& distribution,
                                  const std::vector<DenseOperator>& sigma);

// Outcome probabilities tr(E_k rho) of a POVM on a state.
std::vector<double> measure(const DenseOperator& state, const Povm& povm);

}  // namespace uqram
