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

#ifndef MECPRICE_DIFFERENTIATED_PRICING_HPP
#define MECPRICE_DIFFERENTIATED_PRICING_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "mecprice/knapsack.hpp"
#include "mecprice/uniform_pricing.hpp"

namespace mecprice {

// With per-user prices the cloud charges every served user its full threshold
// 1/F_k and refuses the rest. Choosing whom to serve is a 0/1 knapsack:
// weight m_k C_k cycles, value m_k C_k / F_k seconds.
inline KnapsackInstance build_knapsack(const Scenario& s, const std::vector<UserKinetics>& kin,
                                       double quantum = 1e6) {
  detail::check_kinetics(s, kin);
  KnapsackInstance inst;
  inst.capacity = s.system.cloud_capacity_cycles;
  inst.quantum = quantum;
  inst.weights.reserve(s.users.size());
  inst.values.reserve(s.users.size());
  for (std::size_t k = 0; k < s.users.size(); ++k) {
    const double cycles = kin[k].balance_bits * s.users[k].cycles_per_bit;
    inst.weights.push_back(cycles);
    inst.values.push_back(cycles / s.users[k].local_cpu_cps);
  }
  return inst;
}

struct DifferentiatedOptions {
  double quantum = 1e6;
  // Use 2^K enumeration instead of the DP when K <= kMaxBruteForceItems.
  bool exact_small = false;
  std::size_t cell_budget = kDefaultDpCellBudget;
};

namespace detail {

inline double selection_value(const KnapsackInstance& inst, const std::vector<bool>& sel) {
  double v = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (sel[i]) v += inst.values[i];
  }
  return v;
}

// Same summation order as the outcome's load, so a set that fits here is
// never reported over capacity later.
inline bool fits(const KnapsackInstance& inst, const std::vector<bool>& sel) {
  double w = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (sel[i]) w += inst.weights[i];
  }
  return w <= inst.capacity;
}

// Items by value density (highest first), ties by index.
inline std::vector<std::size_t> density_order(const KnapsackInstance& inst) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.values[a] / inst.weights[a] > inst.values[b] / inst.weights[b];
  });
  return order;
}

// Adds unselected items, densest first, while the real residual capacity
// allows. Recovers capacity lost to rounding the weights up.
inline void fill_residual(const KnapsackInstance& inst, std::vector<bool>& sel) {
  double used = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (sel[i]) used += inst.weights[i];
  }
  for (std::size_t i : density_order(inst)) {
    if (sel[i] || used + inst.weights[i] > inst.capacity) continue;
    sel[i] = true;
    used += inst.weights[i];
  }
}

// Best feasible set of the form "every item at least as dense as d". These are
// exactly the sets a single uniform price can induce.
inline std::vector<bool> best_density_prefix(const KnapsackInstance& inst) {
  const std::vector<std::size_t> order = density_order(inst);
  std::vector<bool> sel(inst.size(), false), best = sel;
  double best_value = 0.0, weight = 0.0, value = 0.0;
  for (std::size_t j = 0; j < order.size();) {
    const double density = inst.values[order[j]] / inst.weights[order[j]];
    std::size_t end = j;
    for (; end < order.size() && inst.values[order[end]] / inst.weights[order[end]] == density; ++end) {
      sel[order[end]] = true;
      weight += inst.weights[order[end]];
      value += inst.values[order[end]];
    }
    if (weight > inst.capacity) break;
    if (value > best_value) {
      best_value = value;
      best = sel;
    }
    j = end;
  }
  return best;
}

}  // namespace detail

struct DifferentiatedResult {
  PriceOutcome outcome;
  KnapsackSolution knapsack;
};

// The quantized DP can miss a selection whose load sits just under the
// capacity. Its answer is polished by refilling the real residual capacity and
// compared with the best uniform-price-shaped selection; the best feasible
// set wins, so the result never earns less than uniform pricing.
inline DifferentiatedResult solve_differentiated_detailed(const Scenario& s, const std::vector<UserKinetics>& kin,
                                                          const DifferentiatedOptions& opt = {}) {
  const KnapsackInstance inst = build_knapsack(s, kin, opt.quantum);
  KnapsackSolution sol = opt.exact_small && inst.size() <= kMaxBruteForceItems
                             ? solve_knapsack_bruteforce(inst)
                             : solve_knapsack_dp(inst, opt.cell_budget);

  std::vector<bool> polished = sol.selected;
  detail::fill_residual(inst, polished);
  std::vector<bool> chosen = sol.selected;
  double chosen_value = sol.total_value;
  for (const auto& alt : {polished, detail::best_density_prefix(inst)}) {
    const double v = detail::selection_value(inst, alt);
    if (v > chosen_value && detail::fits(inst, alt)) {
      chosen = alt;
      chosen_value = v;
    }
  }
  if (chosen != sol.selected) {
    const double gained = chosen_value - sol.total_value;
    const double bound = std::max(0.0, sol.quantization_bound - gained);
    sol = detail::finish(inst, std::move(chosen));
    sol.quantization_bound = bound;
  }

  std::vector<double> prices(s.users.size(), kNoOffloadPrice);
  for (std::size_t k = 0; k < s.users.size(); ++k) {
    if (sol.selected[k]) prices[k] = offload_threshold(s.users[k]);
  }
  DifferentiatedResult r{evaluate_prices(s, kin, prices), std::move(sol)};
  if (!r.outcome.feasible) throw std::logic_error("differentiated pricing produced an infeasible outcome");
  return r;
}

inline PriceOutcome solve_differentiated(const Scenario& s, const std::vector<UserKinetics>& kin,
                                         const DifferentiatedOptions& opt = {}) {
  return solve_differentiated_detailed(s, kin, opt).outcome;
}

inline PriceOutcome solve_differentiated(const Scenario& s, const DifferentiatedOptions& opt = {}) {
  return solve_differentiated(s, compute_all_kinetics(s), opt);
}

}  // namespace mecprice

#endif  // MECPRICE_DIFFERENTIATED_PRICING_HPP
