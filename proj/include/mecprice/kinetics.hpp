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

#ifndef MECPRICE_KINETICS_HPP
#define MECPRICE_KINETICS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mecprice/scenario.hpp"

namespace mecprice {

// Latency model of a single user. Prices are in seconds per cycle so that
// price * cycles is a time and adds directly to latency.
struct UserKinetics {
  double uplink_rate_bps = 0.0;
  double downlink_rate_bps = 0.0;
  double beta_s_per_bit = 0.0;        // offload seconds per offloaded bit
  double balance_bits = 0.0;          // m_k: local time == offload time
  double cloud_speed_share_cps = 0.0;

  bool operator==(const UserKinetics&) const = default;
};

namespace detail {

inline double shannon_rate(const SystemParams& sys, double power_w, double gain) {
  const double sub = sys.subband_hz();
  // log1p keeps very weak links from rounding to a zero rate.
  const double rate = sub * std::log1p(power_w * gain / (sub * sys.noise_psd_w_per_hz)) / std::numbers::ln2;
  if (!std::isfinite(rate) || rate <= 0.0) {
    throw std::invalid_argument("transmission rate is not positive and finite: " + std::to_string(rate));
  }
  return rate;
}

inline void check_bits(const UserProfile& u, double ell) {
  if (!(ell >= 0.0 && ell <= u.data_bits)) {
    throw std::out_of_range("offloaded bits " + std::to_string(ell) + " outside [0, " +
                            std::to_string(u.data_bits) + "]");
  }
}

inline void check_price(double price) {
  if (!(price >= 0.0)) throw std::invalid_argument("price must be >= 0, got " + std::to_string(price));
}

}  // namespace detail

inline double uplink_rate(const SystemParams& sys, const UserProfile& u) {
  return detail::shannon_rate(sys, u.uplink_power_w, u.channel_gain_linear);
}

inline double downlink_rate(const SystemParams& sys, const UserProfile& u) {
  return detail::shannon_rate(sys, u.downlink_power_w, u.channel_gain_linear);
}

// m_k = C_k R_k / (beta_k F_k + C_k), where local and offload time coincide.
inline double balance_point(const UserProfile& u, double beta_s_per_bit) {
  return u.cycles_per_bit * u.data_bits / (beta_s_per_bit * u.local_cpu_cps + u.cycles_per_bit);
}

inline UserKinetics compute_kinetics(const SystemParams& sys, const UserProfile& u) {
  UserKinetics k;
  k.uplink_rate_bps = uplink_rate(sys, u);
  k.downlink_rate_bps = downlink_rate(sys, u);
  k.cloud_speed_share_cps = sys.cloud_share_cps();
  k.beta_s_per_bit = 1.0 / k.uplink_rate_bps + u.cycles_per_bit / k.cloud_speed_share_cps +
                     u.output_ratio / k.downlink_rate_bps;
  k.balance_bits = balance_point(u, k.beta_s_per_bit);
  if (!(k.balance_bits > 0.0 && k.balance_bits < u.data_bits)) {
    throw std::invalid_argument("balance point outside (0, data_bits)");
  }
  return k;
}

inline std::vector<UserKinetics> compute_all_kinetics(const Scenario& s) {
  require_valid(s);
  std::vector<UserKinetics> out;
  out.reserve(s.users.size());
  for (const auto& u : s.users) out.push_back(compute_kinetics(s.system, u));
  return out;
}

inline double local_time(const UserProfile& u, double ell) {
  detail::check_bits(u, ell);
  return (u.data_bits - ell) * u.cycles_per_bit / u.local_cpu_cps;
}

// Uplink + cloud execution + downlink feedback. Algebraically beta * ell.
inline double offload_time(const UserKinetics& kin, const UserProfile& u, double ell) {
  detail::check_bits(u, ell);
  const double up = ell / kin.uplink_rate_bps;
  const double exec = ell * u.cycles_per_bit / kin.cloud_speed_share_cps;
  const double down = u.output_ratio * ell / kin.downlink_rate_bps;
  return up + exec + down;
}

// Local computing and offloading run concurrently.
inline double task_latency(const UserKinetics& kin, const UserProfile& u, double ell) {
  return std::max(local_time(u, ell), offload_time(kin, u, ell));
}

inline double payment(double price, double ell, double cycles_per_bit) {
  // An unpriced (infinite) offer with nothing offloaded costs nothing.
  return ell > 0.0 ? price * ell * cycles_per_bit : 0.0;
}

// Piecewise-linear cost: latency plus payment. The breakpoint ell == m_k is
// evaluated with the first branch.
inline double user_cost(const UserKinetics& kin, const UserProfile& u, double ell, double price) {
  detail::check_bits(u, ell);
  detail::check_price(price);
  const double local_all = u.data_bits * u.cycles_per_bit / u.local_cpu_cps;
  if (ell <= kin.balance_bits) {
    if (ell == 0.0) return local_all;
    return (price - 1.0 / u.local_cpu_cps) * ell * u.cycles_per_bit + local_all;
  }
  return kin.beta_s_per_bit * ell + price * ell * u.cycles_per_bit;
}

}  // namespace mecprice

#endif  // MECPRICE_KINETICS_HPP
