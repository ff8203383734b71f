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

#include "uqram/protocol.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "uqram/interface.hpp"

namespace uqram {

namespace {

// Maximum truth-table enumeration for basis_outputs.
constexpr std::size_t kMaxTableEnumeration = std::size_t{1} << 16;

// std::to_string flattens small tolerances to "0.000000"; print %g instead.
std::string format_number(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%g", value);
  return buffer;
}

void check_operator_dims(const DenseOperator& op, const Dims& expected,
                         const char* what) {
  if (op.dims() != expected) {
    throw ArgumentError(std::string(what) +
                        ": operator dims do not match the protocol system");
  }
}

}  // namespace

ChannelValidity validate_channel(const KrausChannel& channel) {
  if (channel.operators.empty()) {
    throw ArgumentError("channel '" + channel.label + "': no Kraus operators");
  }
  const Dims& dims = channel.operators.front().dims();
  for (const DenseOperator& k : channel.operators) {
    if (k.dims() != dims) {
      throw ArgumentError("channel '" + channel.label +
                          "': Kraus operators disagree on dims");
    }
  }
  const Index d = channel.operators.front().dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const DenseOperator& k : channel.operators) {
    sum += k.matrix().adjoint() * k.matrix();
  }
  ChannelValidity report;
  report.tolerance = tol::kChannel;
  report.completeness_deviation =
      (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  report.pass = report.completeness_deviation <= report.tolerance;
  return report;
}

PovmValidity validate_povm(const Povm& povm) {
  if (povm.effects.empty()) {
    throw ArgumentError("povm: no effects");
  }
  const Dims& dims = povm.effects.front().dims();
  for (const DenseOperator& e : povm.effects) {
    if (e.dims() != dims) {
      throw ArgumentError("povm: effects disagree on dims");
    }
  }
  const Index d = povm.effects.front().dim();
  PovmValidity report;
  report.tolerance = tol::kPovm;
  report.min_effect_eigenvalue = 0.0;
  Matrix sum = Matrix::Zero(d, d);
  for (const DenseOperator& e : povm.effects) {
    report.hermiticity_deviation =
        std::max(report.hermiticity_deviation, e.hermiticity_deviation());
    Matrix sym = 0.5 * (e.matrix() + e.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
    report.min_effect_eigenvalue =
        std::min(report.min_effect_eigenvalue, solver.eigenvalues().minCoeff());
    sum += e.matrix();
  }
  report.closure_deviation =
      (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  report.pass = report.hermiticity_deviation <= report.tolerance &&
                report.min_effect_eigenvalue >= -report.tolerance &&
                report.closure_deviation <= report.tolerance;
  return report;
}

Protocol::Protocol(RegisterLayout layout, DenseOperator initial_state,
                   std::vector<ProtocolStep> steps,
                   std::optional<Povm> final_povm)
    : layout_(layout),
      initial_state_(std::move(initial_state)),
      steps_(std::move(steps)),
      final_povm_(std::move(final_povm)) {
  const Dims s_dims = layout_.s_dims();
  check_operator_dims(initial_state_, s_dims, "protocol initial state");
  StateValidity validity = validate_state(initial_state_);
  if (!validity.pass) {
    throw StateError("protocol initial state is not a valid density operator");
  }
  for (const ProtocolStep& step : steps_) {
    if (const auto* channel = std::get_if<KrausChannel>(&step)) {
      for (const DenseOperator& k : channel->operators) {
        check_operator_dims(k, s_dims, "protocol channel");
      }
      ChannelValidity channel_validity = validate_channel(*channel);
      if (!channel_validity.pass) {
        throw ValidationError(
            "channel '" + channel->label + "': completeness deviation " +
            format_number(channel_validity.completeness_deviation) +
            " exceeds " + format_number(channel_validity.tolerance));
      }
    }
  }
  if (final_povm_) {
    for (const DenseOperator& e : final_povm_->effects) {
      check_operator_dims(e, s_dims, "protocol povm");
    }
    PovmValidity povm_validity = validate_povm(*final_povm_);
    if (!povm_validity.pass) {
      throw ValidationError("protocol povm fails validity checks");
    }
  }
}

std::size_t Protocol::query_count() const {
  std::size_t count = 0;
  for (const ProtocolStep& step : steps_) {
    if (std::holds_alternative<QueryStep>(step)) ++count;
  }
  return count;
}

namespace {

// Joint-space bookkeeping for one run. The joint state lives in the
// global tensor order A, D, M, (R), (Q); inputs arrive in source order
// A, D, (R), M, (Q). The Q factor is only present when the run carries a
// joint memory-reference input.
struct Engine {
  Dims global_dims;
  std::vector<std::size_t> source_to_global;
  std::vector<std::size_t> keep_after_memory_trace;
  bool has_q_factor = false;
  bool reorder_needed = false;

  Engine(const RegisterLayout& layout, bool with_reference) {
    const bool has_r = layout.r_dim() > 1;
    has_q_factor = with_reference && layout.q_dim() > 1;
    global_dims = Dims{layout.a_dim(), layout.d_dim(), layout.m_dim()};
    if (has_r) global_dims.push_back(layout.r_dim());
    if (has_q_factor) global_dims.push_back(layout.q_dim());
    std::size_t count = global_dims.size();
    // Source order lists S factors first, then M, then Q. The permutation
    // below moves M in front of R; with no workspace it is the identity.
    if (has_r) {
      source_to_global = has_q_factor ? std::vector<std::size_t>{0, 1, 3, 2, 4}
                                      : std::vector<std::size_t>{0, 1, 3, 2};
      reorder_needed = true;
    } else {
      source_to_global.resize(count);
      for (std::size_t k = 0; k < count; ++k) source_to_global[k] = k;
    }
    for (std::size_t k = 0; k < count; ++k) {
      if (k != 2) keep_after_memory_trace.push_back(k);
    }
  }

  DenseOperator to_global(const DenseOperator& source_ordered) const {
    return reorder_needed
               ? permute_subsystems(source_ordered, source_to_global)
               : source_ordered;
  }
};

DenseOperator run_impl(const Protocol& protocol, const DenseOperator& rho_mem,
                       bool with_reference) {
  const RegisterLayout& layout = protocol.layout();
  const Dims expected_mem = with_reference ? layout.mq_dims() : layout.m_dims();
  if (rho_mem.dims() != expected_mem) {
    throw ArgumentError("run_protocol: memory state dims do not match the layout");
  }
  StateValidity validity = validate_state(rho_mem);
  if (!validity.pass) {
    throw StateError("run_protocol: memory state is not a valid density operator");
  }

  Engine engine(layout, with_reference);
  DenseOperator joint =
      engine.to_global(kron(protocol.initial_state(), rho_mem));

  // The read unitary extends by identity factors that are already in
  // global order (R and Q trail M), so no reordering is needed for it.
  DenseOperator u_tilde;
  if (protocol.query_count() > 0) {
    u_tilde = build_read_unitary(layout.address_qubits(), layout.total_dim());
    if (layout.r_dim() > 1) {
      u_tilde = kron(u_tilde, DenseOperator::identity({layout.r_dim()}));
    }
    if (engine.has_q_factor) {
      u_tilde = kron(u_tilde, DenseOperator::identity({layout.q_dim()}));
    }
  }

  for (const ProtocolStep& step : protocol.steps()) {
    if (std::holds_alternative<QueryStep>(step)) {
      joint = unitary_conjugate(u_tilde, joint);
    } else {
      const KrausChannel& channel = std::get<KrausChannel>(step);
      DenseOperator next = DenseOperator::zero(engine.global_dims);
      for (const DenseOperator& k : channel.operators) {
        DenseOperator lifted = kron(k, DenseOperator::identity({layout.m_dim()}));
        if (engine.has_q_factor) {
          lifted = kron(lifted, DenseOperator::identity({layout.q_dim()}));
        }
        lifted = engine.to_global(lifted);
        next = next + unitary_conjugate(lifted, joint);
      }
      joint = next;
    }
  }

  DenseOperator out = partial_trace(joint, engine.keep_after_memory_trace);
  StateValidity out_validity = validate_state(out);
  if (!out_validity.pass) {
    throw StateError("run_protocol: induced output failed state validation");
  }
  return out;
}

}  // namespace

DenseOperator run_protocol(const Protocol& protocol, const DenseOperator& rho_m) {
  return run_impl(protocol, rho_m, false);
}

DenseOperator run_protocol_with_reference(const Protocol& protocol,
                                          const DenseOperator& rho_mq) {
  return run_impl(protocol, rho_mq, true);
}

std::vector<DenseOperator> basis_outputs(const Protocol& protocol) {
  const RegisterLayout& layout = protocol.layout();
  if (layout.table_count() > kMaxTableEnumeration) {
    throw CapacityError("basis_outputs: table enumeration exceeds " +
                        std::to_string(kMaxTableEnumeration));
  }
  std::vector<DenseOperator> outputs;
  outputs.reserve(layout.table_count());
  for (std::size_t label = 0; label < layout.table_count(); ++label) {
    DenseOperator table_state = DenseOperator::basis_state(
        layout.m_dims(), static_cast<Index>(label));
    outputs.push_back(run_protocol(protocol, table_state));
  }
  return outputs;
}

DenseOperator mixture_reconstruct(const std::vector<double>& distribution,
                                  const std::vector<DenseOperator>& sigma) {
  if (distribution.size() != sigma.size()) {
    throw ArgumentError("mixture_reconstruct: " +
                        std::to_string(distribution.size()) + " weights for " +
                        std::to_string(sigma.size()) + " states");
  }
  if (sigma.empty()) {
    throw ArgumentError("mixture_reconstruct: empty state list");
  }
  double sum = 0.0;
  for (double p : distribution) {
    if (p < -tol::kDistribution) {
      throw ValidationError("mixture_reconstruct: negative weight");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::kDistribution) {
    throw ValidationError("mixture_reconstruct: weights sum to " +
                          std::to_string(sum) + ", not 1");
  }
  DenseOperator acc = DenseOperator::zero(sigma.front().dims());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!same_dims(sigma[i], sigma.front())) {
      throw ArgumentError("mixture_reconstruct: states disagree on dims");
    }
    acc = acc + distribution[i] * sigma[i];
  }
  return acc;
}

std::vector<double> measure(const DenseOperator& state, const Povm& povm) {
  PovmValidity validity = validate_povm(povm);
  if (!validity.pass) {
    throw ValidationError("measure: povm fails validity checks");
  }
  if (povm.effects.front().dims() != state.dims()) {
    throw ArgumentError("measure: povm dims do not match the state");
  }
  std::vector<double> probabilities;
  probabilities.reserve(povm.effects.size());
  for (const DenseOperator& e : povm.effects) {
    double p = (e.matrix() * state.matrix()).trace().real();
    probabilities.push_back(p < 0.0 ? 0.0 : p);
  }
  return probabilities;
}

}  // namespace uqram
