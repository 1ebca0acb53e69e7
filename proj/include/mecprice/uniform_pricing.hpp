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

#ifndef MECPRICE_UNIFORM_PRICING_HPP
#define MECPRICE_UNIFORM_PRICING_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mecprice/follower.hpp"

namespace mecprice {

// Price that no user accepts. Stands for "this user is not served".
inline constexpr double kNoOffloadPrice = std::numeric_limits<double>::infinity();

inline bool is_no_offload_price(double price) { return std::isinf(price) && price > 0.0; }

// The leader's view of one pricing decision and the followers' reaction.
struct PriceOutcome {
  std::vector<double> prices;  // one entry per user, s/cycle
  std::vector<OffloadDecision> decisions;
  double total_load_cycles = 0.0;
  double revenue_s = 0.0;
  bool feasible = true;  // total load within the cloud capacity

  bool operator==(const PriceOutcome&) const = default;

  bool offloads_nothing() const {
    return std::none_of(decisions.begin(), decisions.end(), [](const OffloadDecision& d) { return d.offload_flag; });
  }
};

namespace detail {

inline void check_kinetics(const Scenario& s, const std::vector<UserKinetics>& kin) {
  if (kin.size() != s.users.size()) throw std::invalid_argument("kinetics/user count mismatch");
}

}  // namespace detail

// Per-user prices applied to every user's best response. Load and revenue are
// accumulated in user order. An outcome over capacity is flagged infeasible
// and earns nothing.
inline PriceOutcome evaluate_prices(const Scenario& s, const std::vector<UserKinetics>& kin,
                                    const std::vector<double>& prices) {
  detail::check_kinetics(s, kin);
  if (prices.size() != s.users.size()) throw std::invalid_argument("price/user count mismatch");
  PriceOutcome out;
  out.prices = prices;
  out.decisions.reserve(s.users.size());
  for (std::size_t k = 0; k < s.users.size(); ++k) {
    const OffloadDecision d = best_response(kin[k], s.users[k], prices[k], k);
    out.total_load_cycles += d.offloaded_bits * s.users[k].cycles_per_bit;
    out.revenue_s += d.payment_s;
    out.decisions.push_back(d);
  }
  if (out.total_load_cycles > s.system.cloud_capacity_cycles) {
    out.feasible = false;
    out.revenue_s = 0.0;
  }
  return out;
}

inline PriceOutcome evaluate_price(const Scenario& s, const std::vector<UserKinetics>& kin, double price) {
  return evaluate_prices(s, kin, std::vector<double>(s.users.size(), price));
}

inline PriceOutcome no_offload_outcome(const Scenario& s, const std::vector<UserKinetics>& kin) {
  return evaluate_price(s, kin, kNoOffloadPrice);
}

// The revenue-maximizing uniform price is always one of the users' offload
// thresholds: between two consecutive thresholds the set of offloaders does
// not change while revenue grows with the price. Ascending, deduplicated.
inline std::vector<double> candidate_prices(const Scenario& s) {
  std::vector<double> c;
  c.reserve(s.users.size());
  for (const auto& u : s.users) c.push_back(offload_threshold(u));
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

// Descending-price bargaining. Offered load only grows as the price drops, so
// the first candidate over capacity ends the search. Revenue ties keep the
// higher price. If even the highest candidate is infeasible nobody is served.
inline PriceOutcome solve_uniform(const Scenario& s, const std::vector<UserKinetics>& kin) {
  const std::vector<double> candidates = candidate_prices(s);
  std::optional<PriceOutcome> best;
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    PriceOutcome out = evaluate_price(s, kin, *it);
    if (!out.feasible) break;
    if (!best || out.revenue_s > best->revenue_s) best = std::move(out);
  }
  return best ? *std::move(best) : no_offload_outcome(s, kin);
}

inline PriceOutcome solve_uniform(const Scenario& s) { return solve_uniform(s, compute_all_kinetics(s)); }

}  // namespace mecprice

#endif  // MECPRICE_UNIFORM_PRICING_HPP
