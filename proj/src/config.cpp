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

#include "dispersim/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dispersim/errors.hpp"
#include "dispersim/log.hpp"
#include "dispersim/operators.hpp"

namespace dispersim {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  for (const auto& item : obj.items())
    if (allowed.find(item.key()) == allowed.end())
      throw ConfigError(path + "." + item.key(), "unknown key");
}

double get_number(const json& obj, const std::string& path,
                  const std::string& key) {
  if (!obj.contains(key)) throw ConfigError(path + "." + key, "missing");
  if (!obj[key].is_number())
    throw ConfigError(path + "." + key, "expected a number");
  return obj[key].get<double>();
}

double get_number_or(const json& obj, const std::string& path,
                     const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number())
    throw ConfigError(path + "." + key, "expected a number");
  return obj[key].get<double>();
}

std::string get_string(const json& obj, const std::string& path,
                       const std::string& key) {
  if (!obj.contains(key)) throw ConfigError(path + "." + key, "missing");
  if (!obj[key].is_string())
    throw ConfigError(path + "." + key, "expected a string");
  return obj[key].get<std::string>();
}

void check_positive(double v, const std::string& path) {
  if (!(v > 0.0)) throw ConfigError(path, "must be > 0");
}

CircuitSpec parse_circuit(const json& obj) {
  require_keys(obj, "circuit",
               {"C_qubit", "C_resonator", "C_coupling", "L_line", "k_coupling",
                "omega_qubit", "omega_resonator"});
  CircuitSpec c{};
  c.C_qubit = get_number(obj, "circuit", "C_qubit");
  c.C_res = get_number(obj, "circuit", "C_resonator");
  c.C_coupling = get_number(obj, "circuit", "C_coupling");
  c.L_line = get_number(obj, "circuit", "L_line");
  c.k_coupling = get_number(obj, "circuit", "k_coupling");
  c.omega_qubit = get_number(obj, "circuit", "omega_qubit");
  c.omega_res = get_number(obj, "circuit", "omega_resonator");
  check_positive(c.C_qubit, "circuit.C_qubit");
  check_positive(c.C_res, "circuit.C_resonator");
  if (c.C_coupling < 0.0) throw ConfigError("circuit.C_coupling", "must be >= 0");
  check_positive(c.L_line, "circuit.L_line");
  if (c.k_coupling < 0.0 || c.k_coupling >= 1.0)
    throw ConfigError("circuit.k_coupling", "must be in [0, 1)");
  check_positive(c.omega_qubit, "circuit.omega_qubit");
  check_positive(c.omega_res, "circuit.omega_resonator");
  if (c.omega_qubit == c.omega_res)
    throw ConfigError("circuit.omega_resonator",
                      "must differ from omega_qubit (dispersive regime)");
  return c;
}

BathSpec parse_bath(const json& obj) {
  require_keys(obj, "bath", {"resistance", "cutoff", "temperature"});
  BathSpec b{};
  b.resistance = get_number(obj, "bath", "resistance");
  b.cutoff = get_number(obj, "bath", "cutoff");
  b.temperature = get_number(obj, "bath", "temperature");
  check_positive(b.resistance, "bath.resistance");
  check_positive(b.cutoff, "bath.cutoff");
  if (b.temperature < 0.0)
    throw ConfigError("bath.temperature", "must be >= 0");
  return b;
}

SimulationConfig parse_simulation(const json& obj) {
  require_keys(obj, "simulation", {"S", "p_max", "t_max_omegaA", "n_times"});
  SimulationConfig s{};
  if (obj.contains("S")) {
    if (!obj["S"].is_number_integer())
      throw ConfigError("simulation.S", "expected an integer");
    s.res_dim = obj["S"].get<int>();
    if (*s.res_dim < 2) throw ConfigError("simulation.S", "must be >= 2");
  }
  s.p_max = get_number_or(obj, "simulation", "p_max", 1e-7);
  if (!(s.p_max > 0.0 && s.p_max < 1.0))
    throw ConfigError("simulation.p_max", "must be in (0, 1)");
  s.t_max = get_number_or(obj, "simulation", "t_max_omegaA", 1e5);
  check_positive(s.t_max, "simulation.t_max_omegaA");
  if (obj.contains("n_times")) {
    if (!obj["n_times"].is_number_integer())
      throw ConfigError("simulation.n_times", "expected an integer");
    s.n_times = obj["n_times"].get<int>();
  }
  if (s.n_times < 2) throw ConfigError("simulation.n_times", "must be >= 2");
  return s;
}

InitialConfig parse_initial(const json& obj) {
  require_keys(obj, "initial", {"qubit", "resonator", "alpha"});
  InitialConfig init{};
  if (obj.contains("qubit")) {
    const std::string q = get_string(obj, "initial", "qubit");
    if (q == "plus")
      init.qubit = QubitInit::plus;
    else if (q == "g")
      init.qubit = QubitInit::ground;
    else if (q == "e")
      init.qubit = QubitInit::excited;
    else
      throw ConfigError("initial.qubit", "expected plus | g | e");
  }
  if (obj.contains("resonator")) {
    const std::string r = get_string(obj, "initial", "resonator");
    if (r == "thermal")
      init.resonator = ResonatorInit::thermal;
    else if (r == "coherent")
      init.resonator = ResonatorInit::coherent;
    else
      throw ConfigError("initial.resonator", "expected thermal | coherent");
  }
  if (init.resonator == ResonatorInit::coherent) {
    if (!obj.contains("alpha"))
      throw ConfigError("initial.alpha", "required for a coherent start");
    const json& a = obj["alpha"];
    if (a.is_number()) {
      init.alpha = {a.get<double>(), 0.0};
    } else if (a.is_array() && a.size() == 2 && a[0].is_number() &&
               a[1].is_number()) {
      init.alpha = {a[0].get<double>(), a[1].get<double>()};
    } else {
      throw ConfigError("initial.alpha", "expected a number or [re, im]");
    }
  } else if (obj.contains("alpha")) {
    throw ConfigError("initial.alpha", "only valid for a coherent start");
  }
  return init;
}

SweepConfig parse_sweep(const json& obj) {
  require_keys(obj, "sweep", {"variable", "grid", "min", "max", "points"});
  SweepConfig s{};
  const std::string var = get_string(obj, "sweep", "variable");
  if (var == "T")
    s.variable = SweepVariable::temperature;
  else if (var == "gamma_prime")
    s.variable = SweepVariable::gamma_prime;
  else if (var == "gf_prime")
    s.variable = SweepVariable::gf_prime;
  else
    throw ConfigError("sweep.variable", "expected T | gamma_prime | gf_prime");
  const std::string grid = get_string(obj, "sweep", "grid");
  if (grid == "log")
    s.grid = GridKind::log;
  else if (grid == "linear")
    s.grid = GridKind::linear;
  else
    throw ConfigError("sweep.grid", "expected log | linear");
  s.min = get_number(obj, "sweep", "min");
  s.max = get_number(obj, "sweep", "max");
  if (!(s.max > s.min)) throw ConfigError("sweep.max", "must be > min");
  if (s.grid == GridKind::log && !(s.min > 0.0))
    throw ConfigError("sweep.min", "must be > 0 on a log grid");
  if (!obj.contains("points") || !obj["points"].is_number_integer())
    throw ConfigError("sweep.points", "expected an integer");
  s.points = obj["points"].get<int>();
  if (s.points < 1) throw ConfigError("sweep.points", "must be >= 1");
  return s;
}

OverrideConfig parse_overrides(const json& obj) {
  require_keys(obj, "overrides", {"gf_prime", "gamma_prime"});
  OverrideConfig o{};
  if (obj.contains("gf_prime")) {
    o.gf_prime = get_number(obj, "overrides", "gf_prime");
    check_positive(*o.gf_prime, "overrides.gf_prime");
  }
  if (obj.contains("gamma_prime")) {
    o.gamma_prime = get_number(obj, "overrides", "gamma_prime");
    if (*o.gamma_prime < 0.0)
      throw ConfigError("overrides.gamma_prime", "must be >= 0");
  }
  return o;
}

BathcheckConfig parse_bathcheck(const json& obj) {
  require_keys(obj, "bathcheck", {"delta_omegas", "omega_min", "omega_max"});
  BathcheckConfig b{};
  if (obj.contains("delta_omegas")) {
    if (!obj["delta_omegas"].is_array())
      throw ConfigError("bathcheck.delta_omegas", "expected an array");
    for (const auto& v : obj["delta_omegas"]) {
      if (!v.is_number())
        throw ConfigError("bathcheck.delta_omegas", "expected numbers");
      const double dw = v.get<double>();
      if (!(dw > 0.0))
        throw ConfigError("bathcheck.delta_omegas", "must be > 0");
      b.delta_omegas.push_back(dw);
    }
  }
  b.omega_min = get_number_or(obj, "bathcheck", "omega_min", 0.0);
  b.omega_max = get_number_or(obj, "bathcheck", "omega_max", 0.0);
  return b;
}

}  // namespace

RunConfig load_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("(root)", std::string("invalid JSON: ") + e.what());
  }
  require_keys(root, "(root)",
               {"circuit", "bath", "simulation", "initial", "sweep",
                "overrides", "bathcheck"});
  if (!root.contains("circuit")) throw ConfigError("circuit", "missing");
  if (!root.contains("bath")) throw ConfigError("bath", "missing");

  RunConfig config;
  config.circuit = parse_circuit(root["circuit"]);
  config.bath = parse_bath(root["bath"]);
  if (root.contains("simulation"))
    config.simulation = parse_simulation(root["simulation"]);
  if (root.contains("initial")) config.initial = parse_initial(root["initial"]);
  if (root.contains("sweep")) config.sweep = parse_sweep(root["sweep"]);
  if (root.contains("overrides"))
    config.overrides = parse_overrides(root["overrides"]);
  if (root.contains("bathcheck"))
    config.bathcheck = parse_bathcheck(root["bathcheck"]);

  // bathcheck defaults tied to the resonator frequency
  if (config.bathcheck.delta_omegas.empty())
    config.bathcheck.delta_omegas = {config.circuit.omega_res / 100.0,
                                     config.circuit.omega_res / 200.0,
                                     config.circuit.omega_res / 400.0};
  if (config.bathcheck.omega_min <= 0.0)
    config.bathcheck.omega_min = 0.5 * config.circuit.omega_res;
  if (config.bathcheck.omega_max <= 0.0)
    config.bathcheck.omega_max = 2.0 * config.circuit.omega_res;
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("(file)", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config(ss.str());
}

DerivedParams effective_params(const RunConfig& config,
                               std::vector<std::string>* warnings) {
  DerivedParams p = derive_params(config.circuit, config.bath, warnings);
  if (config.overrides.gf_prime) {
    p.g_prime = *config.overrides.gf_prime;
    p.g_qr = p.g_prime * p.omega_qubit;
    p.lambda = p.g_qr / p.detuning;
    if (std::abs(p.lambda) >= 1.0)
      throw DispersiveViolation("overridden g' puts |lambda| >= 1");
  }
  if (config.overrides.gamma_prime) {
    p.gamma_prime = *config.overrides.gamma_prime;
    p.gamma = p.gamma_prime * p.omega_qubit;
  }
  return p;
}

int select_res_dim(const RunConfig& config) {
  int auto_dim = truncation_select(config.bath.temperature,
                                   config.circuit.omega_res,
                                   config.simulation.p_max);
  if (config.initial.resonator == ResonatorInit::coherent) {
    // grow until the coherent tail is small enough too
    for (;; ++auto_dim) {
      try {
        coherent_state(config.initial.alpha, auto_dim);
        break;
      } catch (const TruncationLoss&) {
      }
    }
  }
  if (config.simulation.res_dim) {
    if (*config.simulation.res_dim < auto_dim)
      log::info("explicit S = " + std::to_string(*config.simulation.res_dim) +
                " violates the occupancy bound (auto S = " +
                std::to_string(auto_dim) + ")");
    return *config.simulation.res_dim;
  }
  return auto_dim;
}

}  // namespace dispersim
