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

#ifndef MECPRICE_FOLLOWER_HPP
#define MECPRICE_FOLLOWER_HPP

#include <cstddef>
#include <stdexcept>

#include "mecprice/kinetics.hpp"

namespace mecprice {

struct OffloadDecision {
  std::size_t user_index = 0;
  double offloaded_bits = 0.0;
  bool offload_flag = false;
  double cost_s = 0.0;
  double latency_s = 0.0;
  double payment_s = 0.0;

  bool operator==(const OffloadDecision&) const = default;
};

// Price at or below which a user offloads its balance point. Every caller that
// compares against the threshold goes through here so that a price set to
// exactly this value always lands on the offloading side.
inline double offload_threshold(const UserProfile& u) { return 1.0 / u.local_cpu_cps; }

// A user's cost is linear on either side of m_k. Below the threshold the
// slope on [0, m_k] is negative, so the optimum is m_k; above it the cost
// grows from ell = 0. At the threshold every ell in [0, m_k] is optimal and
// the user offloads m_k.
inline OffloadDecision best_response(const UserKinetics& kin, const UserProfile& u, double price,
                                     std::size_t user_index = 0) {
  detail::check_price(price);
  OffloadDecision d;
  d.user_index = user_index;
  d.offload_flag = price <= offload_threshold(u);
  d.offloaded_bits = d.offload_flag ? kin.balance_bits : 0.0;
  d.latency_s = task_latency(kin, u, d.offloaded_bits);
  d.payment_s = payment(price, d.offloaded_bits, u.cycles_per_bit);
  d.cost_s = user_cost(kin, u, d.offloaded_bits, price);
  return d;
}

// Brute-force check of best_response: minimizes user_cost over a uniform grid
// of grid_points values on [0, R_k], preferring the larger ell on ties.
inline double best_response_oracle(const UserKinetics& kin, const UserProfile& u, double price,
                                   std::size_t grid_points) {
  if (grid_points < 1000) throw std::invalid_argument("oracle grid needs at least 1000 points");
  double best_ell = 0.0;
  double best_cost = user_cost(kin, u, 0.0, price);
  const double step = u.data_bits / static_cast<double>(grid_points - 1);
  for (std::size_t i = 1; i < grid_points; ++i) {
    const double ell = i + 1 == grid_points ? u.data_bits : step * static_cast<double>(i);
    const double c = user_cost(kin, u, ell, price);
    if (c <= best_cost) {
      best_cost = c;
      best_ell = ell;
    }
  }
  return best_ell;
}

}  // namespace mecprice

#endif  // MECPRICE_FOLLOWER_HPP
