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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqram/protocol.hpp"

namespace uqram {

// Initial state on S: either a named preparation or an explicit density
// matrix. The one named preparation is "plus_minus": the uniform
// superposition on A, the |-> state on D, and |0> on R.
struct InitialSpec {
  enum class Kind { Named, Matrix };
  Kind kind = Kind::Named;
  std::string name = "plus_minus";
  Matrix matrix;

  DenseOperator realize(const RegisterLayout& layout) const;
};

// Memory hypothesis: a named two-address Bell state ("phi_plus" or
// "phi_minus"), a diagonal ensemble mapping truth-table strings to
// weights, or an explicit density matrix on M (or on M (x) Q).
struct MemorySpec {
  enum class Kind { Named, Diagonal, Matrix };
  Kind kind = Kind::Diagonal;
  std::string name;
  std::map<std::string, double> weights;
  Matrix matrix;

  DenseOperator realize(const RegisterLayout& layout) const;
  // Whether realize() yields a joint memory-reference state.
  bool carries_reference(const RegisterLayout& layout) const;
};

// In-memory form of a protocol file (schema version 1).
struct ProtocolFile {
  int version = 1;
  std::size_t n = 1;
  Index r_dim = 1;
  Index q_dim = 1;
  InitialSpec initial;
  std::vector<ProtocolStep> steps;
  std::optional<Povm> povm;
  std::optional<std::pair<MemorySpec, MemorySpec>> hypotheses;
  std::optional<std::pair<double, double>> priors;

  RegisterLayout layout() const;
  // Full semantic validation happens here (and in MemorySpec::realize).
  Protocol to_protocol() const;
};

// Parses and validates a version-1 protocol file. Syntax and schema
// violations raise ParseError naming the offending field and position;
// numeric contract violations raise the matching engine error.
ProtocolFile parse_protocol_file(const std::string& text);

// Canonical JSON rendering; parsing it back yields an equivalent file.
std::string serialize_protocol_file(const ProtocolFile& file);

const std::vector<std::string>& preset_names();

// Built-in single-query protocol files: "example1" discriminates two
// deterministic tables, "example2" two diagonal ensembles with equal
// second moments, "example3" two Bell states with identical diagonals.
ProtocolFile preset_file(const std::string& name);

}  // namespace uqram
