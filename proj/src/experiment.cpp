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

#include "uqram/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "uqram/discrimination.hpp"
#include "uqram/interface.hpp"
#include "uqram/random.hpp"

namespace uqram {

namespace {

using nlohmann::json;

std::string csv_number(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

double purity(const DenseOperator& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

json eigenvalues_json(const DenseOperator& rho) {
  EigenDecomposition eig = hermitian_eig(rho);
  json out = json::array();
  for (Index k = 0; k < eig.eigenvalues.size(); ++k) {
    out.push_back(eig.eigenvalues(k));
  }
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json layout_json(const ProtocolFile& file) {
  return json{{"n", file.n}, {"r_dim", file.r_dim}, {"q_dim", file.q_dim}};
}

json tolerances_json() {
  return json{{"state", tol::kState},
              {"channel", tol::kChannel},
              {"povm", tol::kPovm},
              {"positive_part", tol::kPositivePart},
              {"opacity", tol::kOpacity}};
}

std::string table_string(const RegisterLayout& layout, std::size_t label) {
  return TruthTable::from_label(label, layout.address_count()).to_string();
}

void run_discriminate(const ProtocolFile& file, std::uint64_t seed,
                      ExperimentReport& report) {
  if (!file.hypotheses) {
    throw UsageError("discriminate mode needs 'hypotheses' in the protocol file");
  }
  RegisterLayout layout = file.layout();
  Protocol protocol = file.to_protocol();
  DenseOperator rho0 = file.hypotheses->first.realize(layout);
  DenseOperator rho1 = file.hypotheses->second.realize(layout);
  const bool with_reference =
      layout.q_dim() > 1 && rho0.dims() == layout.mq_dims();

  DenseOperator sigma0 = with_reference
                             ? run_protocol_with_reference(protocol, rho0)
                             : run_protocol(protocol, rho0);
  DenseOperator sigma1 = with_reference
                             ? run_protocol_with_reference(protocol, rho1)
                             : run_protocol(protocol, rho1);
  const double pi0 = file.priors ? file.priors->first : 0.5;
  const double pi1 = file.priors ? file.priors->second : 0.5;

  DiscriminationResult optimal = helstrom({sigma0, sigma1, pi0, pi1});
  double distance = trace_distance(sigma0, sigma1);

  DenseOperator mem0 = with_reference ? partial_trace(rho0, {0}) : rho0;
  DenseOperator mem1 = with_reference ? partial_trace(rho1, {0}) : rho1;
  std::vector<double> p0 = diagonal_distribution(mem0);
  std::vector<double> p1 = diagonal_distribution(mem1);
  double tv = tv_distance(p0, p1);

  json doc;
  doc["mode"] = "discriminate";
  doc["seed"] = seed;
  doc["layout"] = layout_json(file);
  doc["tolerances"] = tolerances_json();
  doc["priors"] = json::array({pi0, pi1});
  doc["p_success"] = optimal.p_success;
  doc["trace_norm_delta"] = optimal.trace_norm_delta;
  doc["trace_distance"] = distance;
  doc["tv_distance"] = tv;
  doc["induced_states"] =
      json::array({json{{"hypothesis", 0},
                        {"purity", purity(sigma0)},
                        {"eigenvalues", eigenvalues_json(sigma0)}},
                   json{{"hypothesis", 1},
                        {"purity", purity(sigma1)},
                        {"eigenvalues", eigenvalues_json(sigma1)}}});

  std::string alpha_cell;
  std::string saturated_cell;
  if (with_reference) {
    doc["tv_decomposition_skipped"] = "hypotheses carry a reference register";
  } else if (tv <= tol::kDegenerateTv) {
    doc["alpha"] = 0.0;
    doc["tv_decomposition_skipped"] = "truth-table distributions coincide";
    alpha_cell = csv_number(0.0);
  } else {
    std::vector<DenseOperator> sigma = basis_outputs(protocol);
    TvDecomposition split = tv_decomposition(p0, p1, sigma);
    doc["alpha"] = split.alpha;
    doc["saturated"] = split.saturated;
    alpha_cell = csv_number(split.alpha);
    saturated_cell = split.saturated ? "true" : "false";
    json per_table = json::array();
    for (std::size_t m = 0; m < sigma.size(); ++m) {
      per_table.push_back(json{{"table", table_string(layout, m)},
                               {"p0", p0[m]},
                               {"p1", p1[m]},
                               {"purity", purity(sigma[m])}});
    }
    doc["per_table"] = std::move(per_table);
  }

  if (file.povm && !with_reference && file.povm->effects.size() == 2) {
    doc["povm_success"] =
        povm_success({sigma0, sigma1}, {pi0, pi1}, *file.povm);
    doc["povm_outcomes"] = json::array(
        {json(measure(sigma0, *file.povm)), json(measure(sigma1, *file.povm))});
  }

  report.document = std::move(doc);
  report.csv =
      "mode,p_success,trace_norm_delta,trace_distance,tv_distance,alpha,"
      "saturated\n";
  report.csv += "discriminate," + csv_number(optimal.p_success) + "," +
                csv_number(optimal.trace_norm_delta) + "," +
                csv_number(distance) + "," + csv_number(tv) + "," +
                alpha_cell + "," + saturated_cell + "\n";
}

void run_opacity_check(const ProtocolFile& file, std::uint64_t seed,
                       ExperimentReport& report) {
  RegisterLayout layout = file.layout();
  Protocol protocol = file.to_protocol();

  struct Entry {
    std::string label;
    std::string kind;
    DenseOperator rho;
    bool with_reference;
  };
  std::vector<Entry> entries;
  if (file.hypotheses) {
    const MemorySpec* specs[] = {&file.hypotheses->first,
                                 &file.hypotheses->second};
    for (int i = 0; i < 2; ++i) {
      DenseOperator rho = specs[i]->realize(layout);
      bool with_reference =
          layout.q_dim() > 1 && rho.dims() == layout.mq_dims();
      entries.push_back({"hypothesis " + std::to_string(i),
                         with_reference ? "memory-reference" : "memory",
                         std::move(rho), with_reference});
    }
  } else {
    // Seeded sample: alternating pure and full-rank mixed memory states;
    // with a reference register present the last two are joint states.
    SeededRng rng(seed);
    const std::size_t count = 8;
    for (std::size_t i = 0; i < count; ++i) {
      bool entangled = layout.q_dim() > 1 && i + 2 >= count;
      Entry entry;
      entry.label = "random " + std::to_string(i);
      entry.with_reference = entangled;
      Dims dims = entangled ? layout.mq_dims() : layout.m_dims();
      if (i % 2 == 0) {
        entry.kind = entangled ? "entangled-pure" : "pure";
        entry.rho = random_pure_state(rng, dims);
      } else {
        entry.kind = entangled ? "entangled-mixed" : "mixed";
        entry.rho = random_density_operator(
            rng, dims, entangled ? 2 : layout.m_dim());
      }
      entries.push_back(std::move(entry));
    }
  }

  std::vector<DenseOperator> sigma;
  bool have_sigma = false;
  double worst_opacity = 0.0;
  double worst_mixture = 0.0;
  double worst_reference = 0.0;
  json rows = json::array();
  report.csv =
      "memory,kind,opacity_deviation,mixture_deviation,reference_deviation\n";
  for (const Entry& entry : entries) {
    json row;
    row["memory"] = entry.label;
    row["kind"] = entry.kind;
    std::string opacity_cell;
    std::string mixture_cell;
    std::string reference_cell;
    if (entry.with_reference) {
      DenseOperator out = run_protocol_with_reference(protocol, entry.rho);
      DenseOperator dephased = run_protocol_with_reference(
          protocol, pinch_with_reference(entry.rho));
      double deviation = (out - dephased).max_abs();
      row["reference_deviation"] = deviation;
      reference_cell = csv_number(deviation);
      worst_reference = std::max(worst_reference, deviation);
    } else {
      DenseOperator out = run_protocol(protocol, entry.rho);
      DenseOperator dephased = run_protocol(protocol, pinch(entry.rho));
      double deviation = (out - dephased).max_abs();
      row["opacity_deviation"] = deviation;
      opacity_cell = csv_number(deviation);
      worst_opacity = std::max(worst_opacity, deviation);
      if (!have_sigma) {
        sigma = basis_outputs(protocol);
        have_sigma = true;
      }
      DenseOperator mixed =
          mixture_reconstruct(diagonal_distribution(entry.rho), sigma);
      double mixture_deviation = (out - mixed).max_abs();
      row["mixture_deviation"] = mixture_deviation;
      mixture_cell = csv_number(mixture_deviation);
      worst_mixture = std::max(worst_mixture, mixture_deviation);
    }
    rows.push_back(std::move(row));
    report.csv += entry.label + "," + entry.kind + "," + opacity_cell + "," +
                  mixture_cell + "," + reference_cell + "\n";
  }

  double worst = std::max({worst_opacity, worst_mixture, worst_reference});
  json doc;
  doc["mode"] = "opacity-check";
  doc["seed"] = seed;
  doc["layout"] = layout_json(file);
  doc["tolerances"] = tolerances_json();
  doc["memories"] = std::move(rows);
  doc["worst_opacity_deviation"] = worst_opacity;
  doc["worst_mixture_deviation"] = worst_mixture;
  doc["worst_reference_deviation"] = worst_reference;
  doc["threshold"] = tol::kOpacity;
  doc["pass"] = worst <= tol::kOpacity;
  report.property_violation = worst > tol::kOpacity;
  report.document = std::move(doc);
}

void run_basis_outputs(const ProtocolFile& file, std::uint64_t seed,
                       ExperimentReport& report) {
  RegisterLayout layout = file.layout();
  Protocol protocol = file.to_protocol();
  std::vector<DenseOperator> sigma = basis_outputs(protocol);

  json tables = json::array();
  report.csv = "table,purity\n";
  for (std::size_t m = 0; m < sigma.size(); ++m) {
    std::string table = table_string(layout, m);
    double p = purity(sigma[m]);
    tables.push_back(json{{"table", table},
                          {"purity", p},
                          {"eigenvalues", eigenvalues_json(sigma[m])},
                          {"matrix", matrix_json(sigma[m].matrix())}});
    report.csv += table + "," + csv_number(p) + "\n";
  }

  json doc;
  doc["mode"] = "basis-outputs";
  doc["seed"] = seed;
  doc["layout"] = layout_json(file);
  doc["tolerances"] = tolerances_json();
  doc["tables"] = std::move(tables);
  report.document = std::move(doc);
}

}  // namespace

ExperimentMode parse_experiment_mode(const std::string& text) {
  if (text == "discriminate") return ExperimentMode::Discriminate;
  if (text == "opacity-check") return ExperimentMode::OpacityCheck;
  if (text == "basis-outputs") return ExperimentMode::BasisOutputs;
  throw UsageError("unknown mode '" + text +
                   "' (available: discriminate, opacity-check, basis-outputs)");
}

std::string experiment_mode_name(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::Discriminate:
      return "discriminate";
    case ExperimentMode::OpacityCheck:
      return "opacity-check";
    case ExperimentMode::BasisOutputs:
      return "basis-outputs";
  }
  throw Error("experiment_mode_name: unreachable");
}

ExperimentReport run_experiment(const ProtocolFile& file, ExperimentMode mode,
                                std::uint64_t seed) {
  ExperimentReport report;
  switch (mode) {
    case ExperimentMode::Discriminate:
      run_discriminate(file, seed, report);
      break;
    case ExperimentMode::OpacityCheck:
      run_opacity_check(file, seed, report);
      break;
    case ExperimentMode::BasisOutputs:
      run_basis_outputs(file, seed, report);
      break;
  }
  return report;
}

ExperimentReport fuzz_opacity(const FuzzOptions& options) {
  if (options.trials == 0) {
    throw UsageError("fuzz: trial count must be positive");
  }
  // Fails fast when the requested geometry exceeds the budget.
  RegisterLayout::make(options.n, 1, 1);

  SeededRng rng(options.seed);
  double worst_opacity = 0.0;
  double worst_mixture = 0.0;
  double worst_reference = 0.0;
  double worst_phase_pair = 0.0;
  std::size_t violations = 0;

  std::string csv =
      "trial,memory,queries,r_dim,q_dim,opacity_deviation,mixture_deviation,"
      "reference_deviation,phase_pair_deviation\n";

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::size_t kind = trial % 3;
    const Index q_dim = kind == 2 ? 2 : 1;
    Protocol protocol =
        random_protocol(rng, options.n, options.max_queries, 2, q_dim);
    const RegisterLayout& layout = protocol.layout();

    double trial_worst = 0.0;
    std::string opacity_cell;
    std::string mixture_cell;
    std::string reference_cell;
    std::string phase_cell;
    std::string memory_kind;

    if (kind == 2) {
      memory_kind = "entangled";
      DenseOperator rho_mq =
          trial % 2 == 0 ? random_pure_state(rng, layout.mq_dims())
                         : random_density_operator(rng, layout.mq_dims(), 2);
      DenseOperator out = run_protocol_with_reference(protocol, rho_mq);
      DenseOperator dephased =
          run_protocol_with_reference(protocol, pinch_with_reference(rho_mq));
      double deviation = (out - dephased).max_abs();
      reference_cell = csv_number(deviation);
      worst_reference = std::max(worst_reference, deviation);
      trial_worst = std::max(trial_worst, deviation);
    } else {
      memory_kind = kind == 0 ? "pure" : "mixed";
      DenseOperator rho_m =
          kind == 0 ? random_pure_state(rng, layout.m_dims())
                    : random_density_operator(rng, layout.m_dims(),
                                              layout.m_dim());
      DenseOperator out = run_protocol(protocol, rho_m);
      DenseOperator dephased = run_protocol(protocol, pinch(rho_m));
      double deviation = (out - dephased).max_abs();
      opacity_cell = csv_number(deviation);
      worst_opacity = std::max(worst_opacity, deviation);
      trial_worst = std::max(trial_worst, deviation);

      std::vector<DenseOperator> sigma = basis_outputs(protocol);
      DenseOperator mixed =
          mixture_reconstruct(diagonal_distribution(rho_m), sigma);
      double mixture_deviation = (out - mixed).max_abs();
      mixture_cell = csv_number(mixture_deviation);
      worst_mixture = std::max(worst_mixture, mixture_deviation);
      trial_worst = std::max(trial_worst, mixture_deviation);
    }

    // Two-address memories admit an unobservable relative phase: the
    // Bell pair with flipped sign must induce the same output.
    if (options.n == 1) {
      Vector plus = Vector::Zero(4);
      plus(0) = Complex(1.0 / std::sqrt(2.0), 0.0);
      plus(3) = Complex(1.0 / std::sqrt(2.0), 0.0);
      Vector minus = plus;
      minus(3) = -minus(3);
      DenseOperator out_plus = run_protocol(
          protocol, DenseOperator::from_vector(plus, layout.m_dims()));
      DenseOperator out_minus = run_protocol(
          protocol, DenseOperator::from_vector(minus, layout.m_dims()));
      double deviation = (out_plus - out_minus).max_abs();
      phase_cell = csv_number(deviation);
      worst_phase_pair = std::max(worst_phase_pair, deviation);
      trial_worst = std::max(trial_worst, deviation);
    }

    if (trial_worst > tol::kOpacity) ++violations;
    csv += std::to_string(trial) + "," + memory_kind + "," +
           std::to_string(protocol.query_count()) + "," +
           std::to_string(layout.r_dim()) + "," +
           std::to_string(layout.q_dim()) + "," + opacity_cell + "," +
           mixture_cell + "," + reference_cell + "," + phase_cell + "\n";
  }

  json doc;
  doc["campaign"] = "opacity-fuzz";
  doc["n"] = options.n;
  doc["trials"] = options.trials;
  doc["max_queries"] = options.max_queries;
  doc["seed"] = options.seed;
  doc["threshold"] = tol::kOpacity;
  doc["worst_opacity_deviation"] = worst_opacity;
  doc["worst_mixture_deviation"] = worst_mixture;
  doc["worst_reference_deviation"] = worst_reference;
  doc["worst_phase_pair_deviation"] = worst_phase_pair;
  doc["violations"] = violations;
  doc["pass"] = violations == 0;

  ExperimentReport report;
  report.document = std::move(doc);
  report.csv = std::move(csv);
  report.property_violation = violations > 0;
  return report;
}

}  // namespace uqram
