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

#include <string>
#include <utility>

namespace uqram {

namespace {

bool is_power_of_two(Index d) { return d >= 1 && (d & (d - 1)) == 0; }

// Validates the A/D/M geometry for n address qubits against the cap.
RegisterLayout reader_layout(std::size_t address_qubits, Index dim_cap) {
  return RegisterLayout::make(address_qubits, 1, 1, dim_cap);
}

}  // namespace

DenseOperator build_read_unitary(std::size_t address_qubits, Index dim_cap) {
  RegisterLayout layout = reader_layout(address_qubits, dim_cap);
  const Index a_dim = layout.a_dim();
  const Index m_dim = layout.m_dim();
  const std::size_t addresses = layout.address_count();
  const Index total = a_dim * 2 * m_dim;

  Matrix u = Matrix::Zero(total, total);
  for (Index a = 0; a < a_dim; ++a) {
    for (Index m = 0; m < m_dim; ++m) {
      TruthTable table =
          TruthTable::from_label(static_cast<std::size_t>(m), addresses);
      Index bit = table.bit(static_cast<std::size_t>(a));
      for (Index y = 0; y < 2; ++y) {
        Index src = (a * 2 + y) * m_dim + m;
        Index dst = (a * 2 + (y ^ bit)) * m_dim + m;
        u(dst, src) = Complex(1.0, 0.0);
      }
    }
  }
  return DenseOperator(std::move(u), Dims{a_dim, 2, m_dim});
}

DenseOperator assemble_read_unitary_from_tables(std::size_t address_qubits,
                                                Index dim_cap) {
  RegisterLayout layout = reader_layout(address_qubits, dim_cap);
  const Index m_dim = layout.m_dim();
  const std::size_t addresses = layout.address_count();

  DenseOperator sum = DenseOperator::zero(Dims{layout.a_dim(), 2, m_dim});
  for (Index m = 0; m < m_dim; ++m) {
    TruthTable table =
        TruthTable::from_label(static_cast<std::size_t>(m), addresses);
    DenseOperator v = build_table_unitary(address_qubits, table);
    DenseOperator block = DenseOperator::basis_state(Dims{m_dim}, m);
    sum = sum + kron(v, block);
  }
  return sum;
}

DenseOperator build_table_unitary(std::size_t address_qubits,
                                  const TruthTable& table) {
  if (address_qubits < 1 || address_qubits >= 32) {
    throw ArgumentError("build_table_unitary: address qubit count out of range");
  }
  const Index a_dim = Index{1} << address_qubits;
  if (table.size() != static_cast<std::size_t>(a_dim)) {
    throw ArgumentError("build_table_unitary: table has " +
                        std::to_string(table.size()) + " entries, expected " +
                        std::to_string(a_dim));
  }
  Matrix v = Matrix::Zero(a_dim * 2, a_dim * 2);
  for (Index a = 0; a < a_dim; ++a) {
    Index bit = table.bit(static_cast<std::size_t>(a));
    for (Index y = 0; y < 2; ++y) {
      v(a * 2 + (y ^ bit), a * 2 + y) = Complex(1.0, 0.0);
    }
  }
  return DenseOperator(std::move(v), Dims{a_dim, 2});
}

DenseOperator build_phase_oracle(std::size_t address_qubits,
                                 const TruthTable& table) {
  if (address_qubits < 1 || address_qubits >= 32) {
    throw ArgumentError("build_phase_oracle: address qubit count out of range");
  }
  const Index a_dim = Index{1} << address_qubits;
  if (table.size() != static_cast<std::size_t>(a_dim)) {
    throw ArgumentError("build_phase_oracle: table has " +
                        std::to_string(table.size()) + " entries, expected " +
                        std::to_string(a_dim));
  }
  Matrix o = Matrix::Zero(a_dim, a_dim);
  for (Index a = 0; a < a_dim; ++a) {
    o(a, a) = table.bit(static_cast<std::size_t>(a)) ? Complex(-1.0, 0.0)
                                                     : Complex(1.0, 0.0);
  }
  return DenseOperator(std::move(o), Dims{a_dim});
}

DenseOperator dephase_subsystem(const DenseOperator& op, std::size_t subsystem) {
  const Dims& dims = op.dims();
  if (subsystem >= dims.size()) {
    throw ArgumentError("dephase_subsystem: subsystem index out of range");
  }
  Index stride = 1;
  for (std::size_t k = dims.size(); k-- > subsystem + 1;) stride *= dims[k];
  const Index block = dims[subsystem];

  Matrix out = op.matrix();
  const Index total = op.dim();
  for (Index i = 0; i < total; ++i) {
    Index label_i = (i / stride) % block;
    for (Index j = 0; j < total; ++j) {
      Index label_j = (j / stride) % block;
      if (label_i != label_j) out(i, j) = Complex(0.0, 0.0);
    }
  }
  return DenseOperator(std::move(out), dims);
}

DenseOperator pinch(const DenseOperator& rho_m) {
  if (rho_m.subsystem_count() != 1 || !is_power_of_two(rho_m.dim()) ||
      rho_m.dim() < 2) {
    throw ArgumentError("pinch: expected a single memory factor of dimension 2^N");
  }
  return dephase_subsystem(rho_m, 0);
}

DenseOperator pinch_with_reference(const DenseOperator& rho_mq) {
  if (rho_mq.subsystem_count() < 1 || rho_mq.subsystem_count() > 2 ||
      !is_power_of_two(rho_mq.dims()[0]) || rho_mq.dims()[0] < 2) {
    throw ArgumentError(
        "pinch_with_reference: expected a memory factor of dimension 2^N with "
        "at most one reference factor");
  }
  return dephase_subsystem(rho_mq, 0);
}

std::vector<double> diagonal_distribution(const DenseOperator& rho_m) {
  if (rho_m.subsystem_count() != 1 || !is_power_of_two(rho_m.dim()) ||
      rho_m.dim() < 2) {
    throw ArgumentError(
        "diagonal_distribution: expected a single memory factor of dimension 2^N");
  }
  StateValidity validity = validate_state(rho_m);
  if (!validity.pass) {
    throw StateError("diagonal_distribution: input is not a valid state");
  }
  std::vector<double> dist(static_cast<std::size_t>(rho_m.dim()));
  for (Index k = 0; k < rho_m.dim(); ++k) {
    double p = rho_m.matrix()(k, k).real();
    dist[static_cast<std::size_t>(k)] = p < 0.0 ? 0.0 : p;
  }
  return dist;
}

}  // namespace uqram
