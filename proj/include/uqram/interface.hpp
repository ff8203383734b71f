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
#include <vector>

#include "uqram/dense_operator.hpp"
#include "uqram/registers.hpp"

namespace uqram {

// Read unitary on A (x) D (x) M for n address qubits: the permutation
// |a, y, m> -> |a, y xor m_a, m>. Result dims are [2^n, 2, 2^N].
DenseOperator build_read_unitary(std::size_t address_qubits,
                                 Index dim_cap = kDefaultDimCap);

// Same operator assembled from the controlled decomposition
// sum_m V_m (x) |m><m| with V_m the per-table unitary. Built as an
// independent cross-check of build_read_unitary.
DenseOperator assemble_read_unitary_from_tables(std::size_t address_qubits,
                                                Index dim_cap = kDefaultDimCap);

// Per-table read action V_m on A (x) D: |a, y> -> |a, y xor m_a>.
DenseOperator build_table_unitary(std::size_t address_qubits,
                                  const TruthTable& table);

// Diagonal phase unitary O_m on A alone: |a> -> (-1)^{m_a} |a>.
// V_m acts on |psi>|-> as (O_m|psi>)|->.
DenseOperator build_phase_oracle(std::size_t address_qubits,
                                 const TruthTable& table);

// Zeroes every entry whose row and column labels differ on the given
// subsystem; all other entries are kept unchanged.
DenseOperator dephase_subsystem(const DenseOperator& op, std::size_t subsystem);

// Full dephasing of a memory state in the truth-table basis: keeps only
// the diagonal. Input must be a single-subsystem operator whose dimension
// is a power of two.
DenseOperator pinch(const DenseOperator& rho_m);

// Block dephasing of a joint memory-reference state: applies the pinching
// on the memory factor while leaving the reference untouched,
// sum_m (P_m (x) 1) rho (P_m (x) 1).
DenseOperator pinch_with_reference(const DenseOperator& rho_mq);

// Probability of each truth table under a memory state: the diagonal of a
// valid density operator, in label order.
std::vector<double> diagonal_distribution(const DenseOperator& rho_m);

}  // namespace uqram
