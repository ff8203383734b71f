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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "uqram/experiment.hpp"

namespace {

// Exit codes: 0 success, 1 usage or parse error, 2 validation error,
// 3 property violation (a checked identity deviated above threshold).
constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw uqram::UsageError("cannot open protocol file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const uqram::ExperimentReport& report, bool csv) {
  if (csv) {
    std::cout << report.csv;
  } else {
    std::cout << report.document.dump(2) << "\n";
  }
  return report.property_violation ? kExitViolation : kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-matrix simulator for quantum random-access memory "
               "read protocols"};
  app.require_subcommand(1);

  std::string run_path;
  std::string run_mode;
  std::uint64_t run_seed = 0;
  bool run_csv = false;
  CLI::App* run_cmd =
      app.add_subcommand("run", "Run an experiment from a protocol file");
  run_cmd->add_option("file", run_path, "Protocol file (JSON)")->required();
  run_cmd
      ->add_option("--mode", run_mode,
                   "discriminate | opacity-check | basis-outputs")
      ->required();
  run_cmd->add_option("--seed", run_seed, "Seed for any sampled memories");
  run_cmd->add_flag("--csv", run_csv, "Emit CSV instead of JSON");

  uqram::FuzzOptions fuzz_options;
  bool fuzz_csv = false;
  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "Randomized campaign checking the induced-output identities");
  fuzz_cmd->add_option("--n", fuzz_options.n, "Address qubits (default 1)");
  fuzz_cmd->add_option("--trials", fuzz_options.trials,
                       "Number of trials (default 100)");
  fuzz_cmd->add_option("--max-queries", fuzz_options.max_queries,
                       "Maximum queries per protocol (default 3)");
  fuzz_cmd->add_option("--seed", fuzz_options.seed, "Campaign seed");
  fuzz_cmd->add_flag("--csv", fuzz_csv, "Emit per-trial CSV instead of JSON");

  std::string preset_name;
  CLI::App* preset_cmd =
      app.add_subcommand("preset", "Print a built-in protocol file");
  preset_cmd->add_option("name", preset_name, "example1 | example2 | example3")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) {
      uqram::ExperimentMode mode = uqram::parse_experiment_mode(run_mode);
      uqram::ProtocolFile file =
          uqram::parse_protocol_file(read_file(run_path));
      return emit(uqram::run_experiment(file, mode, run_seed), run_csv);
    }
    if (fuzz_cmd->parsed()) {
      return emit(uqram::fuzz_opacity(fuzz_options), fuzz_csv);
    }
    if (preset_cmd->parsed()) {
      std::cout << uqram::serialize_protocol_file(
          uqram::preset_file(preset_name));
      return kExitSuccess;
    }
  } catch (const uqram::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const uqram::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const uqram::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitSuccess;
}
