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

#include <stdexcept>

namespace uqram {

// Root of the library error hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally malformed input: bad dimensions, out-of-range indices,
// count mismatches.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Numeric contract violation: non-Hermitian input where Hermitian is
// required, Kraus sets that are not trace preserving, POVMs that do not
// close, probability lists that do not sum to one.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A density operator failed the state validity checks.
class StateError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Requested Hilbert dimension exceeds the configured budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Input is degenerate for the requested decomposition.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Protocol-file syntax or schema violation.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Command-line or mode usage violation.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace uqram
