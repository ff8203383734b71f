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
#include <string>

#include "json.hpp"

#include "uqram/protocol_io.hpp"

namespace uqram {

enum class ExperimentMode { Discriminate, OpacityCheck, BasisOutputs };

// Accepts "discriminate", "opacity-check", "basis-outputs".
ExperimentMode parse_experiment_mode(const std::string& text);
std::string experiment_mode_name(ExperimentMode mode);

// Machine-readable outcome of an experiment or fuzz campaign. The same
// seed and inputs always produce byte-identical documents.
struct ExperimentReport {
  nlohmann::json document;
  std::string csv;
  // True when a checked identity deviated beyond tol::kOpacity.
  bool property_violation = false;
};

// Runs one protocol file in the requested mode.
//   discriminate:  runs both hypotheses, reports the optimal binary
//                  discrimination results, the truth-table TV distance,
//                  and the sign decomposition when the TV is nonzero.
//   opacity-check: verifies the induced output only depends on the
//                  dephased memory state, for the file's hypotheses or
//                  for seeded random memory states.
//   basis-outputs: reports the induced output for every truth table.
ExperimentReport run_experiment(const ProtocolFile& file, ExperimentMode mode,
                                std::uint64_t seed);

struct FuzzOptions {
  std::size_t n = 1;
  std::size_t trials = 100;
  std::size_t max_queries = 3;
  std::uint64_t seed = 0;
};

// Randomized campaign over protocols and memory states checking that
// dephasing the memory, reconstructing from truth-table mixtures, and
// flipping unobservable phases never change the induced output by more
// than tol::kOpacity.
ExperimentReport fuzz_opacity(const FuzzOptions& options);

}  // namespace uqram
