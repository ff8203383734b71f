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

#include "uqram/protocol_io.hpp"

#include <cmath>
#include <cstddef>
#include <set>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

#include "json.hpp"

namespace uqram {

namespace {

using nlohmann::json;

// 1-based line and column of a byte offset, for parse diagnostics.
std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail_field(const std::string& field, const std::string& what) {
  throw ParseError("protocol file: field '" + field + "': " + what);
}

const json& require_field(const json& obj, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError("protocol file: missing mandatory field '" +
                     std::string(field) + "'");
  }
  return *it;
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.contains(it.key())) {
      throw ParseError("protocol file: unknown field '" + it.key() + "' in " +
                       where);
    }
  }
}

Index parse_positive_integer(const json& node, const std::string& field) {
  if (!node.is_number_integer() || node.get<long long>() < 1) {
    fail_field(field, "expected a positive integer");
  }
  return static_cast<Index>(node.get<long long>());
}

// Matrix literal: an array of rows; each entry is a [re, im] pair. Must be
// square and non-empty.
Matrix parse_matrix(const json& node, const std::string& field) {
  if (!node.is_array() || node.empty()) {
    fail_field(field, "expected a non-empty array of rows");
  }
  const std::size_t side = node.size();
  Matrix out(static_cast<Index>(side), static_cast<Index>(side));
  for (std::size_t i = 0; i < side; ++i) {
    const json& row = node[i];
    if (!row.is_array() || row.size() != side) {
      fail_field(field, "row " + std::to_string(i) + " does not have " +
                            std::to_string(side) + " entries (matrix must be square)");
    }
    for (std::size_t j = 0; j < side; ++j) {
      const json& cell = row[j];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        fail_field(field, "entry (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") is not a [re, im] pair");
      }
      out(static_cast<Index>(i), static_cast<Index>(j)) =
          Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
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

void check_matrix_side(const Matrix& m, Index expected,
                       const std::string& field) {
  if (m.rows() != expected) {
    fail_field(field, "matrix side " + std::to_string(m.rows()) +
                          " does not match the declared registers (expected " +
                          std::to_string(expected) + ")");
  }
}

InitialSpec parse_initial(const json& node) {
  InitialSpec spec;
  if (node.is_string()) {
    spec.kind = InitialSpec::Kind::Named;
    spec.name = node.get<std::string>();
    if (spec.name != "plus_minus") {
      fail_field("initial", "unknown named state '" + spec.name +
                                "' (available: plus_minus)");
    }
    return spec;
  }
  if (node.is_object()) {
    reject_unknown_keys(node, {"matrix"}, "'initial'");
    spec.kind = InitialSpec::Kind::Matrix;
    spec.matrix = parse_matrix(require_field(node, "matrix"), "initial.matrix");
    return spec;
  }
  fail_field("initial", "expected a named state or an object with a 'matrix'");
}

MemorySpec parse_memory_spec(const json& node, const std::string& field,
                             std::size_t addresses) {
  MemorySpec spec;
  if (node.is_string()) {
    spec.kind = MemorySpec::Kind::Named;
    spec.name = node.get<std::string>();
    if (spec.name != "phi_plus" && spec.name != "phi_minus") {
      fail_field(field, "unknown named memory state '" + spec.name +
                            "' (available: phi_plus, phi_minus)");
    }
    return spec;
  }
  if (!node.is_object()) {
    fail_field(field, "expected a name, a 'diagonal' object, or a 'matrix'");
  }
  reject_unknown_keys(node, {"named", "diagonal", "matrix"}, "'" + field + "'");
  if (node.contains("named")) {
    return parse_memory_spec(node["named"], field + ".named", addresses);
  }
  if (node.contains("diagonal")) {
    const json& diag = node["diagonal"];
    if (!diag.is_object() || diag.empty()) {
      fail_field(field + ".diagonal", "expected a non-empty table->weight object");
    }
    spec.kind = MemorySpec::Kind::Diagonal;
    for (auto it = diag.begin(); it != diag.end(); ++it) {
      const std::string& table = it.key();
      if (table.size() != addresses ||
          table.find_first_not_of("01") != std::string::npos) {
        fail_field(field + ".diagonal",
                   "key '" + table + "' is not a truth table over " +
                       std::to_string(addresses) + " addresses");
      }
      if (!it.value().is_number()) {
        fail_field(field + ".diagonal", "weight of '" + table + "' is not a number");
      }
      spec.weights[table] = it.value().get<double>();
    }
    return spec;
  }
  if (node.contains("matrix")) {
    spec.kind = MemorySpec::Kind::Matrix;
    spec.matrix = parse_matrix(node["matrix"], field + ".matrix");
    return spec;
  }
  fail_field(field, "expected one of 'named', 'diagonal', 'matrix'");
}

json memory_spec_to_json(const MemorySpec& spec) {
  switch (spec.kind) {
    case MemorySpec::Kind::Named:
      return spec.name;
    case MemorySpec::Kind::Diagonal: {
      json diag = json::object();
      for (const auto& [table, weight] : spec.weights) diag[table] = weight;
      return json{{"diagonal", std::move(diag)}};
    }
    case MemorySpec::Kind::Matrix:
      return json{{"matrix", matrix_to_json(spec.matrix)}};
  }
  throw Error("memory_spec_to_json: unreachable");
}

Vector column_kron(const std::vector<Vector>& factors) {
  Vector acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = Eigen::kroneckerProduct(acc, factors[i]).eval();
  }
  return acc;
}

}  // namespace

DenseOperator InitialSpec::realize(const RegisterLayout& layout) const {
  if (kind == Kind::Matrix) {
    if (matrix.rows() != layout.s_dim()) {
      throw ArgumentError("initial state: matrix side does not match the system");
    }
    return DenseOperator(matrix, layout.s_dims());
  }
  std::vector<Vector> factors;
  Vector a = Vector::Constant(layout.a_dim(),
                              Complex(1.0 / std::sqrt(static_cast<double>(
                                                layout.a_dim())),
                                      0.0));
  factors.push_back(std::move(a));
  Vector d(2);
  d << Complex(1.0 / std::sqrt(2.0), 0.0), Complex(-1.0 / std::sqrt(2.0), 0.0);
  factors.push_back(std::move(d));
  if (layout.r_dim() > 1) {
    Vector r = Vector::Zero(layout.r_dim());
    r(0) = Complex(1.0, 0.0);
    factors.push_back(std::move(r));
  }
  return DenseOperator::from_vector(column_kron(factors), layout.s_dims());
}

bool MemorySpec::carries_reference(const RegisterLayout& layout) const {
  return kind == Kind::Matrix && layout.q_dim() > 1 &&
         matrix.rows() == layout.m_dim() * layout.q_dim();
}

DenseOperator MemorySpec::realize(const RegisterLayout& layout) const {
  switch (kind) {
    case Kind::Named: {
      if (layout.m_dim() != 4) {
        throw ValidationError("memory state '" + name +
                              "' needs a two-address memory (n = 1)");
      }
      Vector psi = Vector::Zero(4);
      psi(0) = Complex(1.0 / std::sqrt(2.0), 0.0);
      psi(3) = name == "phi_plus" ? Complex(1.0 / std::sqrt(2.0), 0.0)
                                  : Complex(-1.0 / std::sqrt(2.0), 0.0);
      return DenseOperator::from_vector(psi, layout.m_dims());
    }
    case Kind::Diagonal: {
      double sum = 0.0;
      for (const auto& [table, weight] : weights) {
        if (table.size() != layout.address_count()) {
          throw ArgumentError("diagonal memory spec: table '" + table +
                              "' does not cover " +
                              std::to_string(layout.address_count()) +
                              " addresses");
        }
        if (weight < 0.0) {
          throw ValidationError("diagonal memory spec: negative weight for '" +
                                table + "'");
        }
        sum += weight;
      }
      if (std::abs(sum - 1.0) > tol::kDistribution) {
        throw ValidationError("diagonal memory spec: weights sum to " +
                              std::to_string(sum) + ", not 1");
      }
      Matrix rho = Matrix::Zero(layout.m_dim(), layout.m_dim());
      for (const auto& [table, weight] : weights) {
        auto label =
            static_cast<Index>(TruthTable::from_string(table).label());
        rho(label, label) = Complex(weight, 0.0);
      }
      return DenseOperator(std::move(rho), layout.m_dims());
    }
    case Kind::Matrix: {
      if (matrix.rows() == layout.m_dim()) {
        return DenseOperator(matrix, layout.m_dims());
      }
      if (layout.q_dim() > 1 &&
          matrix.rows() == layout.m_dim() * layout.q_dim()) {
        return DenseOperator(matrix, layout.mq_dims());
      }
      throw ArgumentError(
          "memory spec: matrix side matches neither M nor M (x) Q");
    }
  }
  throw Error("MemorySpec::realize: unreachable");
}

RegisterLayout ProtocolFile::layout() const {
  return RegisterLayout::make(n, r_dim, q_dim);
}

Protocol ProtocolFile::to_protocol() const {
  RegisterLayout reg = layout();
  Protocol protocol(reg, initial.realize(reg), steps, povm);
  if (hypotheses) {
    DenseOperator first = hypotheses->first.realize(reg);
    DenseOperator second = hypotheses->second.realize(reg);
    for (const DenseOperator* rho : {&first, &second}) {
      StateValidity validity = validate_state(*rho);
      if (!validity.pass) {
        throw StateError("hypothesis state fails validity checks");
      }
    }
    if (first.dims() != second.dims()) {
      throw ValidationError("hypotheses must live on the same registers");
    }
  }
  if (priors) {
    if (priors->first < 0.0 || priors->second < 0.0 ||
        std::abs(priors->first + priors->second - 1.0) > tol::kPriors) {
      throw ValidationError("priors must be nonnegative and sum to 1");
    }
  }
  return protocol;
}

ProtocolFile parse_protocol_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("protocol file: invalid JSON at line " +
                     std::to_string(line) + ", column " +
                     std::to_string(column));
  }
  if (!doc.is_object()) {
    throw ParseError("protocol file: top level must be an object");
  }
  reject_unknown_keys(doc,
                      {"version", "n", "r_dim", "q_dim", "initial", "steps",
                       "povm", "hypotheses", "priors"},
                      "the top level");

  ProtocolFile file;
  const json& version = require_field(doc, "version");
  if (!version.is_number_integer() || version.get<long long>() != 1) {
    fail_field("version", "unsupported schema version (expected 1)");
  }
  file.version = 1;
  file.n = static_cast<std::size_t>(
      parse_positive_integer(require_field(doc, "n"), "n"));
  if (doc.contains("r_dim")) {
    file.r_dim = parse_positive_integer(doc["r_dim"], "r_dim");
  }
  if (doc.contains("q_dim")) {
    file.q_dim = parse_positive_integer(doc["q_dim"], "q_dim");
  }

  RegisterLayout reg = file.layout();
  file.initial = parse_initial(require_field(doc, "initial"));
  if (file.initial.kind == InitialSpec::Kind::Matrix) {
    check_matrix_side(file.initial.matrix, reg.s_dim(), "initial.matrix");
  }

  const json& steps = require_field(doc, "steps");
  if (!steps.is_array()) {
    fail_field("steps", "expected an array");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string field = "steps[" + std::to_string(i) + "]";
    const json& node = steps[i];
    if (!node.is_object()) {
      fail_field(field, "expected an object with a 'type'");
    }
    reject_unknown_keys(node, {"type", "label", "kraus"}, "'" + field + "'");
    const json& type = require_field(node, "type");
    if (!type.is_string()) {
      fail_field(field + ".type", "expected a string");
    }
    if (type == "query") {
      file.steps.emplace_back(QueryStep{});
      continue;
    }
    if (type != "channel") {
      fail_field(field + ".type", "expected 'query' or 'channel'");
    }
    KrausChannel channel;
    if (node.contains("label")) {
      if (!node["label"].is_string()) {
        fail_field(field + ".label", "expected a string");
      }
      channel.label = node["label"].get<std::string>();
    }
    const json& kraus = require_field(node, "kraus");
    if (!kraus.is_array() || kraus.empty()) {
      fail_field(field + ".kraus", "expected a non-empty array of matrices");
    }
    for (std::size_t k = 0; k < kraus.size(); ++k) {
      const std::string entry = field + ".kraus[" + std::to_string(k) + "]";
      Matrix op = parse_matrix(kraus[k], entry);
      check_matrix_side(op, reg.s_dim(), entry);
      channel.operators.emplace_back(std::move(op), reg.s_dims());
    }
    file.steps.emplace_back(std::move(channel));
  }

  if (doc.contains("povm")) {
    const json& povm = doc["povm"];
    if (!povm.is_array() || povm.empty()) {
      fail_field("povm", "expected a non-empty array of effect matrices");
    }
    Povm effects;
    for (std::size_t i = 0; i < povm.size(); ++i) {
      const std::string entry = "povm[" + std::to_string(i) + "]";
      Matrix e = parse_matrix(povm[i], entry);
      check_matrix_side(e, reg.s_dim(), entry);
      effects.effects.emplace_back(std::move(e), reg.s_dims());
    }
    file.povm = std::move(effects);
  }

  if (doc.contains("hypotheses")) {
    const json& hyp = doc["hypotheses"];
    if (!hyp.is_array() || hyp.size() != 2) {
      fail_field("hypotheses", "expected exactly two memory specs");
    }
    file.hypotheses = std::make_pair(
        parse_memory_spec(hyp[0], "hypotheses[0]", reg.address_count()),
        parse_memory_spec(hyp[1], "hypotheses[1]", reg.address_count()));
  }

  if (doc.contains("priors")) {
    const json& priors = doc["priors"];
    if (!priors.is_array() || priors.size() != 2 || !priors[0].is_number() ||
        !priors[1].is_number()) {
      fail_field("priors", "expected an array of two numbers");
    }
    file.priors =
        std::make_pair(priors[0].get<double>(), priors[1].get<double>());
  }

  // Trigger full semantic validation before handing the file out.
  file.to_protocol();
  return file;
}

std::string serialize_protocol_file(const ProtocolFile& file) {
  json doc;
  doc["version"] = file.version;
  doc["n"] = file.n;
  doc["r_dim"] = file.r_dim;
  doc["q_dim"] = file.q_dim;
  if (file.initial.kind == InitialSpec::Kind::Named) {
    doc["initial"] = file.initial.name;
  } else {
    doc["initial"] = json{{"matrix", matrix_to_json(file.initial.matrix)}};
  }
  json steps = json::array();
  for (const ProtocolStep& step : file.steps) {
    if (std::holds_alternative<QueryStep>(step)) {
      steps.push_back(json{{"type", "query"}});
      continue;
    }
    const KrausChannel& channel = std::get<KrausChannel>(step);
    json node{{"type", "channel"}};
    if (!channel.label.empty()) node["label"] = channel.label;
    json kraus = json::array();
    for (const DenseOperator& k : channel.operators) {
      kraus.push_back(matrix_to_json(k.matrix()));
    }
    node["kraus"] = std::move(kraus);
    steps.push_back(std::move(node));
  }
  doc["steps"] = std::move(steps);
  if (file.povm) {
    json povm = json::array();
    for (const DenseOperator& e : file.povm->effects) {
      povm.push_back(matrix_to_json(e.matrix()));
    }
    doc["povm"] = std::move(povm);
  }
  if (file.hypotheses) {
    doc["hypotheses"] = json::array({memory_spec_to_json(file.hypotheses->first),
                                     memory_spec_to_json(file.hypotheses->second)});
  }
  if (file.priors) {
    doc["priors"] = json::array({file.priors->first, file.priors->second});
  }
  return doc.dump(2) + "\n";
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"example1", "example2",
                                              "example3"};
  return names;
}

ProtocolFile preset_file(const std::string& name) {
  ProtocolFile file;
  file.version = 1;
  file.n = 1;
  file.r_dim = 1;
  file.q_dim = 1;
  file.initial.kind = InitialSpec::Kind::Named;
  file.initial.name = "plus_minus";
  file.steps.emplace_back(QueryStep{});
  file.priors = std::make_pair(0.5, 0.5);

  // X-basis readout of the address qubit.
  Matrix plus(2, 2);
  plus << Complex(0.5, 0.0), Complex(0.5, 0.0), Complex(0.5, 0.0),
      Complex(0.5, 0.0);
  Matrix minus(2, 2);
  minus << Complex(0.5, 0.0), Complex(-0.5, 0.0), Complex(-0.5, 0.0),
      Complex(0.5, 0.0);
  DenseOperator data_identity = DenseOperator::identity({2});
  Povm povm;
  povm.effects.push_back(
      kron(DenseOperator(plus, {2}), data_identity));
  povm.effects.push_back(
      kron(DenseOperator(minus, {2}), data_identity));
  file.povm = std::move(povm);

  MemorySpec h0;
  MemorySpec h1;
  if (name == "example1") {
    h0.kind = MemorySpec::Kind::Diagonal;
    h0.weights = {{"00", 1.0}};
    h1.kind = MemorySpec::Kind::Diagonal;
    h1.weights = {{"01", 1.0}};
  } else if (name == "example2") {
    h0.kind = MemorySpec::Kind::Diagonal;
    h0.weights = {{"00", 0.5}, {"11", 0.5}};
    h1.kind = MemorySpec::Kind::Diagonal;
    h1.weights = {{"00", 0.5}, {"01", 0.5}};
  } else if (name == "example3") {
    h0.kind = MemorySpec::Kind::Named;
    h0.name = "phi_plus";
    h1.kind = MemorySpec::Kind::Named;
    h1.name = "phi_minus";
  } else {
    std::string known;
    for (const std::string& preset : preset_names()) {
      if (!known.empty()) known += ", ";
      known += preset;
    }
    throw UsageError("unknown preset '" + name + "' (available: " + known + ")");
  }
  file.hypotheses = std::make_pair(std::move(h0), std::move(h1));
  return file;
}

}  // namespace uqram
