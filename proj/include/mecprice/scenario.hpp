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

#ifndef MECPRICE_SCENARIO_HPP
#define MECPRICE_SCENARIO_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mecprice {

// Everything below is in SI base units (bits, seconds, Hz, W, cycles).
// dB and dBm only appear in ScenarioConfig.

struct SystemParams {
  double bandwidth_hz = 0.0;           // B, split equally across users
  double noise_psd_w_per_hz = 0.0;     // N0
  double cloud_speed_cps = 0.0;        // f_C, split equally across users
  double cloud_capacity_cycles = 0.0;  // cycle budget per offloading period
  std::size_t num_users = 0;           // K

  double subband_hz() const { return bandwidth_hz / static_cast<double>(num_users); }
  double cloud_share_cps() const { return cloud_speed_cps / static_cast<double>(num_users); }

  bool operator==(const SystemParams&) const = default;
};

struct UserProfile {
  double data_bits = 0.0;            // R_k
  double cycles_per_bit = 0.0;       // C_k
  double local_cpu_cps = 0.0;        // F_k
  double output_ratio = 0.0;         // alpha_k, output bits per offloaded input bit
  double uplink_power_w = 0.0;       // p_k
  double downlink_power_w = 0.0;     // P_B,k
  double channel_gain_linear = 0.0;  // h_k

  bool operator==(const UserProfile&) const = default;
};

struct Scenario {
  SystemParams system;
  std::vector<UserProfile> users;

  bool operator==(const Scenario&) const = default;
};

// Sampling ranges are closed intervals. The local CPU frequency is drawn from
// the discrete grid {cpu_hz_min, cpu_hz_min + cpu_hz_step, ..., cpu_hz_max}.
struct ScenarioConfig {
  double bandwidth_hz = 1e6;
  double noise_dbm_per_hz = -174.0;
  double cloud_speed_cps = 100e9;
  double capacity_cycles = 6e9;
  std::size_t num_users = 30;
  std::uint64_t seed = 1;

  double gain_db_min = -50.0;
  double gain_db_max = -30.0;
  double cpu_hz_min = 0.1e9;
  double cpu_hz_max = 1.0e9;
  double cpu_hz_step = 0.1e9;
  double cycles_per_bit_min = 500.0;
  double cycles_per_bit_max = 1500.0;
  double data_kb_min = 100.0;
  double data_kb_max = 500.0;

  double uplink_power_w = 0.1;
  double downlink_power_w = 1.0;
  double output_ratio = 0.2;
};

inline constexpr double kBitsPerKilobyte = 8e3;

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Throws std::invalid_argument describing the first bad field.
inline void validate_config(const ScenarioConfig& c) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid scenario config: ") + what);
  };
  require(std::isfinite(c.noise_dbm_per_hz), "noise_dbm_per_hz must be finite");
  require(c.bandwidth_hz > 0.0 && std::isfinite(c.bandwidth_hz), "bandwidth_hz must be > 0");
  require(c.cloud_speed_cps > 0.0 && std::isfinite(c.cloud_speed_cps), "cloud_speed_cps must be > 0");
  require(c.capacity_cycles > 0.0 && std::isfinite(c.capacity_cycles), "capacity_cycles must be > 0");
  require(c.num_users >= 1, "num_users must be >= 1");
  require(c.gain_db_min <= c.gain_db_max, "gain_db_min > gain_db_max");
  require(c.cpu_hz_min > 0.0 && c.cpu_hz_min <= c.cpu_hz_max, "cpu_hz range must be positive and ordered");
  require(c.cpu_hz_step > 0.0, "cpu_hz_step must be > 0");
  require(c.cycles_per_bit_min > 0.0 && c.cycles_per_bit_min <= c.cycles_per_bit_max,
          "cycles_per_bit range must be positive and ordered");
  require(c.data_kb_min > 0.0 && c.data_kb_min <= c.data_kb_max, "data_kb range must be positive and ordered");
  require(c.uplink_power_w > 0.0, "uplink_power_w must be > 0");
  require(c.downlink_power_w > 0.0, "downlink_power_w must be > 0");
  require(c.output_ratio > 0.0, "output_ratio must be > 0");
}

namespace detail {

// Portable draws on top of std::mt19937_64, whose output sequence is fixed by
// the standard. The std distributions are implementation-defined and are not
// used, so a (config, seed) pair produces the same scenario on every platform.
class PortableStream {
 public:
  explicit PortableStream(std::uint64_t seed) : engine_(seed) {}

  // 53 random bits mapped to [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    if (lo == hi) return lo;
    const double x = lo + (hi - lo) * unit();
    return x > hi ? hi : x;
  }

  std::size_t index(std::size_t n) {
    const auto i = static_cast<std::size_t>(unit() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

inline std::vector<double> cpu_frequency_grid(const ScenarioConfig& c) {
  const auto steps = static_cast<std::size_t>(std::floor((c.cpu_hz_max - c.cpu_hz_min) / c.cpu_hz_step + 1e-9));
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) grid.push_back(c.cpu_hz_min + static_cast<double>(i) * c.cpu_hz_step);
  return grid;
}

// One mt19937_64 stream per scenario, seeded with config.seed. Per user the
// draws happen in the order: channel gain, CPU frequency, cycles per bit,
// data size.
inline Scenario sample_scenario(const ScenarioConfig& c) {
  validate_config(c);
  Scenario s;
  s.system.bandwidth_hz = c.bandwidth_hz;
  s.system.noise_psd_w_per_hz = dbm_to_watts(c.noise_dbm_per_hz);
  s.system.cloud_speed_cps = c.cloud_speed_cps;
  s.system.cloud_capacity_cycles = c.capacity_cycles;
  s.system.num_users = c.num_users;

  const std::vector<double> cpu_grid = cpu_frequency_grid(c);
  detail::PortableStream rng(c.seed);
  s.users.reserve(c.num_users);
  for (std::size_t k = 0; k < c.num_users; ++k) {
    UserProfile u;
    u.channel_gain_linear = db_to_linear(rng.uniform(c.gain_db_min, c.gain_db_max));
    u.local_cpu_cps = cpu_grid[rng.index(cpu_grid.size())];
    u.cycles_per_bit = rng.uniform(c.cycles_per_bit_min, c.cycles_per_bit_max);
    u.data_bits = rng.uniform(c.data_kb_min, c.data_kb_max) * kBitsPerKilobyte;
    u.output_ratio = c.output_ratio;
    u.uplink_power_w = c.uplink_power_w;
    u.downlink_power_w = c.downlink_power_w;
    s.users.push_back(u);
  }
  return s;
}

// Returns one human-readable entry per violated invariant; empty means valid.
inline std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> out;
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  const SystemParams& sys = s.system;
  if (!positive(sys.bandwidth_hz)) out.emplace_back("system.bandwidth_hz must be > 0");
  if (!positive(sys.noise_psd_w_per_hz)) out.emplace_back("system.noise_psd_w_per_hz must be > 0");
  if (!positive(sys.cloud_speed_cps)) out.emplace_back("system.cloud_speed_cps must be > 0");
  if (!positive(sys.cloud_capacity_cycles)) out.emplace_back("system.cloud_capacity_cycles must be > 0");
  if (sys.num_users < 1) out.emplace_back("system.num_users must be >= 1");
  if (s.users.size() != sys.num_users) {
    out.push_back("users length " + std::to_string(s.users.size()) + " does not match num_users " +
                  std::to_string(sys.num_users));
  }
  for (std::size_t k = 0; k < s.users.size(); ++k) {
    const UserProfile& u = s.users[k];
    const std::string at = "users[" + std::to_string(k) + "].";
    if (!positive(u.data_bits)) out.push_back(at + "data_bits must be > 0");
    if (!positive(u.cycles_per_bit)) out.push_back(at + "cycles_per_bit must be > 0");
    if (!positive(u.local_cpu_cps)) out.push_back(at + "local_cpu_cps must be > 0");
    if (!positive(u.output_ratio)) out.push_back(at + "output_ratio must be > 0");
    if (!positive(u.uplink_power_w)) out.push_back(at + "uplink_power_w must be > 0");
    if (!positive(u.downlink_power_w)) out.push_back(at + "downlink_power_w must be > 0");
    if (!positive(u.channel_gain_linear)) out.push_back(at + "channel_gain_linear must be > 0");
  }
  return out;
}

inline void require_valid(const Scenario& s) {
  const auto problems = validate_scenario(s);
  if (!problems.empty()) throw std::invalid_argument("invalid scenario: " + problems.front());
}

}  // namespace mecprice

#endif  // MECPRICE_SCENARIO_HPP
