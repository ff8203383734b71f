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

#include "uqram/registers.hpp"

#include <cmath>
#include <utility>

namespace uqram {

TruthTable::TruthTable(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) {
    throw ArgumentError("truth table: bit list is empty");
  }
  for (std::uint8_t b : bits_) {
    if (b > 1) {
      throw ArgumentError("truth table: entries must be 0 or 1");
    }
  }
}

TruthTable TruthTable::from_label(std::size_t label, std::size_t bit_count) {
  if (bit_count == 0 || bit_count >= 64) {
    throw ArgumentError("truth table: bit count must be in [1, 63]");
  }
  if (label >= (std::size_t{1} << bit_count)) {
    throw ArgumentError("truth table: label " + std::to_string(label) +
                        " out of range for " + std::to_string(bit_count) +
                        " bits");
  }
  std::vector<std::uint8_t> bits(bit_count);
  for (std::size_t a = 0; a < bit_count; ++a) {
    bits[a] = static_cast<std::uint8_t>((label >> (bit_count - 1 - a)) & 1u);
  }
  return TruthTable(std::move(bits));
}

TruthTable TruthTable::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ArgumentError("truth table: string must contain only '0' and '1'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return TruthTable(std::move(bits));
}

int TruthTable::bit(std::size_t address) const {
  if (address >= bits_.size()) {
    throw ArgumentError("truth table: address " + std::to_string(address) +
                        " out of range for " + std::to_string(bits_.size()) +
                        " entries");
  }
  return bits_[address];
}

std::size_t TruthTable::label() const {
  std::size_t value = 0;
  for (std::uint8_t b : bits_) value = (value << 1) | b;
  return value;
}

std::string TruthTable::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

std::vector<TruthTable> all_tables(std::size_t bit_count) {
  if (bit_count == 0 || bit_count > 20) {
    throw CapacityError("all_tables: bit count must be in [1, 20]");
  }
  std::size_t count = std::size_t{1} << bit_count;
  std::vector<TruthTable> tables;
  tables.reserve(count);
  for (std::size_t label = 0; label < count; ++label) {
    tables.push_back(TruthTable::from_label(label, bit_count));
  }
  return tables;
}

RegisterLayout RegisterLayout::make(std::size_t address_qubits, Index r_dim,
                                    Index q_dim, Index dim_cap) {
  if (address_qubits < 1) {
    throw ArgumentError("register layout: need at least one address qubit");
  }
  if (r_dim < 1 || q_dim < 1) {
    throw ArgumentError("register layout: register dimensions must be >= 1");
  }
  if (address_qubits >= 32) {
    throw CapacityError("register layout: address register alone overflows any budget");
  }
  std::size_t addresses = std::size_t{1} << address_qubits;
  long double total =
      std::pow(2.0L, static_cast<long double>(address_qubits + 1 + addresses)) *
      static_cast<long double>(r_dim) * static_cast<long double>(q_dim);
  if (total > static_cast<long double>(dim_cap)) {
    throw CapacityError("register layout: total dimension exceeds the cap of " +
                        std::to_string(dim_cap));
  }
  return RegisterLayout(address_qubits, r_dim, q_dim);
}

std::vector<Register> RegisterLayout::registers() const {
  return {{'A', a_dim()}, {'D', d_dim()}, {'M', m_dim()},
          {'R', r_dim()}, {'Q', q_dim()}};
}

Dims RegisterLayout::tensor_dims() const {
  Dims dims;
  for (const Register& reg : registers()) {
    if (reg.dim > 1) dims.push_back(reg.dim);
  }
  return dims;
}

Dims RegisterLayout::s_dims() const {
  Dims dims{a_dim(), d_dim()};
  if (r_dim_ > 1) dims.push_back(r_dim_);
  return dims;
}

Dims RegisterLayout::sq_dims() const {
  Dims dims = s_dims();
  if (q_dim_ > 1) dims.push_back(q_dim_);
  return dims;
}

Dims RegisterLayout::mq_dims() const {
  Dims dims{m_dim()};
  if (q_dim_ > 1) dims.push_back(q_dim_);
  return dims;
}

Index basis_index(const RegisterLayout& layout, std::span<const Index> labels) {
  Dims dims = layout.tensor_dims();
  if (labels.size() != dims.size()) {
    throw ArgumentError("basis_index: expected " + std::to_string(dims.size()) +
                        " labels, got " + std::to_string(labels.size()));
  }
  Index flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (labels[k] < 0 || labels[k] >= dims[k]) {
      throw ArgumentError("basis_index: label " + std::to_string(labels[k]) +
                          " out of range for factor of dimension " +
                          std::to_string(dims[k]));
    }
    flat = flat * dims[k] + labels[k];
  }
  return flat;
}

}  // namespace uqram
