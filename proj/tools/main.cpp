// Copyright 2026 The dispersim authors
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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "dispersim/commands.hpp"
#include "dispersim/errors.hpp"
#include "dispersim/log.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_numerical = 3;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dispersive transmon drive-line decoherence simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  dispersim::CommandOptions options;

  app.add_option("--config", config_path, "JSON configuration file")
      ->required();
  app.add_option("--out", out_path, "output file (stdout when omitted)");
  app.add_option("--jobs", options.jobs, "worker threads for sweeps")
      ->check(CLI::PositiveNumber);
  app.add_option("--gamma-b", options.gamma_b,
                 "background decoherence rate [1/s]");
  app.add_option("--seed", options.seed,
                 "seed for randomized fixtures (core math is deterministic)");

  auto* derive = app.add_subcommand("derive", "derived parameter report");
  auto* evolve = app.add_subcommand("evolve", "time evolution CSV");
  auto* rates = app.add_subcommand("rates", "decoherence-rate sweep CSV");
  auto* bathcheck =
      app.add_subcommand("bathcheck", "bath discretization convergence CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    const dispersim::RunConfig config =
        dispersim::load_config_file(config_path);
    if (derive->parsed()) {
      write_output(dispersim::cmd_derive(config), out_path);
    } else if (evolve->parsed()) {
      const dispersim::EvolveResult result =
          dispersim::cmd_evolve(config, options);
      write_output(result.csv, out_path);
      const std::string side_path =
          out_path.empty() ? "" : out_path + ".json";
      if (side_path.empty())
        std::cerr << result.sidecar;
      else {
        std::ofstream side(side_path, std::ios::binary);
        side << result.sidecar;
      }
    } else if (rates->parsed()) {
      write_output(dispersim::cmd_rates(config, options), out_path);
    } else if (bathcheck->parsed()) {
      write_output(dispersim::cmd_bathcheck(config), out_path);
    }
  } catch (const dispersim::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return exit_validation;
  } catch (const dispersim::InvalidCircuit& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return exit_validation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_numerical;
  }
  return exit_ok;
}
