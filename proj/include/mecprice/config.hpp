// Copyright 2026 The mecprice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MECPRICE_CONFIG_HPP
#define MECPRICE_CONFIG_HPP

// Plain-text "key = value" configuration. '#' starts a comment, blank lines
// are ignored, and an unknown key is an error.
//
//   # scenario
//   bandwidth_hz = 1e6
//   noise_dbm_per_hz = -174
//   capacity_cycles = 6e9
//   num_users = 30
//   seed = 7
//   # sweep (only read by the sweep command)
//   sweep_param = capacity
//   sweep_values = 2e9, 4e9, 6e9
//   trials = 200
//   quantum = 1e6

#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mecprice/bench.hpp"
#include "mecprice/scenario.hpp"

namespace mecprice {

struct RunConfig {
  ScenarioConfig scenario;
  SweepSpec sweep;  // sweep.base mirrors scenario
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw std::invalid_argument("config key '" + key + "': not a number: " + v);
  return x;
}

inline std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  std::uint64_t x = 0;
  try {
    if (!v.empty() && v.front() != '-') x = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) {
    throw std::invalid_argument("config key '" + key + "': not a non-negative integer: " + v);
  }
  return x;
}

}  // namespace detail

inline RunConfig parse_config(std::istream& is) {
  RunConfig rc;
  ScenarioConfig& c = rc.scenario;
  SweepSpec& sw = rc.sweep;

  using Setter = std::function<void(const std::string&, const std::string&)>;
  auto num = [](double& field) -> Setter {
    return [&field](const std::string& k, const std::string& v) { field = detail::parse_double(k, v); };
  };
  const std::map<std::string, Setter> setters = {
      {"bandwidth_hz", num(c.bandwidth_hz)},
      {"noise_dbm_per_hz", num(c.noise_dbm_per_hz)},
      {"cloud_speed_cps", num(c.cloud_speed_cps)},
      {"capacity_cycles", num(c.capacity_cycles)},
      {"num_users", [&c](const std::string& k, const std::string& v) { c.num_users = detail::parse_u64(k, v); }},
      {"seed", [&c](const std::string& k, const std::string& v) { c.seed = detail::parse_u64(k, v); }},
      {"gain_db_min", num(c.gain_db_min)},
      {"gain_db_max", num(c.gain_db_max)},
      {"cpu_hz_min", num(c.cpu_hz_min)},
      {"cpu_hz_max", num(c.cpu_hz_max)},
      {"cpu_hz_step", num(c.cpu_hz_step)},
      {"cycles_per_bit_min", num(c.cycles_per_bit_min)},
      {"cycles_per_bit_max", num(c.cycles_per_bit_max)},
      {"data_kb_min", num(c.data_kb_min)},
      {"data_kb_max", num(c.data_kb_max)},
      {"uplink_power_w", num(c.uplink_power_w)},
      {"downlink_power_w", num(c.downlink_power_w)},
      {"output_ratio", num(c.output_ratio)},
      {"sweep_param", [&sw](const std::string&, const std::string& v) { sw.param = parse_sweep_param(v); }},
      {"sweep_values",
       [&sw](const std::string& k, const std::string& v) {
         sw.values.clear();
         std::stringstream ss(v);
         std::string item;
         while (std::getline(ss, item, ',')) sw.values.push_back(detail::parse_double(k, detail::trim(item)));
       }},
      {"trials", [&sw](const std::string& k, const std::string& v) { sw.trials = detail::parse_u64(k, v); }},
      {"quantum", num(sw.quantum)},
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    it->second(key, value);
  }
  validate_config(c);
  sw.base = c;
  return rc;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config '" + path + "'");
  return parse_config(f);
}

}  // namespace mecprice

#endif  // MECPRICE_CONFIG_HPP
