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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uqram/errors.hpp"
#include "uqram/types.hpp"

namespace uqram {

// Classical memory contents: one bit per address. Bit 0 is the most
// significant bit of the integer label, so for two addresses the string
// "01" carries label 1 and "10" carries label 2.
class TruthTable {
 public:
  explicit TruthTable(std::vector<std::uint8_t> bits);
  static TruthTable from_label(std::size_t label, std::size_t bit_count);
  static TruthTable from_string(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  // Bit stored at the given address.
  int bit(std::size_t address) const;
  std::size_t label() const;
  std::string to_string() const;

  bool operator==(const TruthTable&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// All tables on `bit_count` addresses, in label order.
std::vector<TruthTable> all_tables(std::size_t bit_count);

struct Register {
  char name;
  Index dim;
};

// Register bookkeeping for a simulation instance. The global tensor order
// is A (address, dim 2^n), D (data qubit, dim 2), M (memory, dim 2^N with
// N = 2^n), R (workspace), Q (reference). Registers of dimension 1 are
// absent: they keep their metadata entry but contribute no tensor factor.
class RegisterLayout {
 public:
  static RegisterLayout make(std::size_t address_qubits, Index r_dim,
                             Index q_dim, Index dim_cap = kDefaultDimCap);

  std::size_t address_qubits() const { return n_; }
  // Number of memory addresses N = 2^n.
  std::size_t address_count() const { return std::size_t{1} << n_; }
  // Number of truth tables 2^N.
  std::size_t table_count() const { return std::size_t{1} << address_count(); }

  Index a_dim() const { return Index{1} << n_; }
  Index d_dim() const { return 2; }
  Index m_dim() const { return Index{1} << address_count(); }
  Index r_dim() const { return r_dim_; }
  Index q_dim() const { return q_dim_; }

  // All five registers, including absent (dimension 1) ones.
  std::vector<Register> registers() const;

  // Present factors in global order A, D, M, R, Q.
  Dims tensor_dims() const;
  // Protocol-visible system S = A (x) D (x) R.
  Dims s_dims() const;
  // S extended by the reference Q.
  Dims sq_dims() const;
  Dims m_dims() const { return Dims{m_dim()}; }
  Dims mq_dims() const;

  Index s_dim() const { return dims_product(s_dims()); }
  Index sq_dim() const { return dims_product(sq_dims()); }
  Index total_dim() const { return dims_product(tensor_dims()); }

 private:
  RegisterLayout(std::size_t n, Index r_dim, Index q_dim)
      : n_(n), r_dim_(r_dim), q_dim_(q_dim) {}

  std::size_t n_;
  Index r_dim_;
  Index q_dim_;
};

// Flat row index of a basis state given one label per present tensor
// factor, in the layout's global order (leftmost factor most significant).
Index basis_index(const RegisterLayout& layout, std::span<const Index> labels);

}  // namespace uqram
