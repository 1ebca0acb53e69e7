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

#ifndef MECPRICE_KNAPSACK_HPP
#define MECPRICE_KNAPSACK_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mecprice {

// 0/1 knapsack with real weights and values.
struct KnapsackInstance {
  std::vector<double> weights;
  std::vector<double> values;
  double capacity = 0.0;
  double quantum = 1e6;  // DP weight resolution

  std::size_t size() const { return weights.size(); }
};

struct KnapsackSolution {
  std::vector<bool> selected;
  double total_weight = 0.0;  // sum of selected original weights, item order
  double total_value = 0.0;   // sum of selected values, item order
  // Upper bound on (true optimum - total_value). Zero for exact solvers and
  // whenever all weights sit on the quantum grid.
  double quantization_bound = 0.0;

  bool operator==(const KnapsackSolution&) const = default;
};

// Thrown when the DP table would exceed the cell budget. Coarsen the quantum.
class KnapsackBudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultDpCellBudget = std::size_t{1} << 28;
inline constexpr std::size_t kMaxBruteForceItems = 20;

namespace detail {

inline void check_instance(const KnapsackInstance& inst) {
  if (inst.weights.size() != inst.values.size()) throw std::invalid_argument("knapsack weights/values size mismatch");
  if (!(inst.capacity >= 0.0) || !std::isfinite(inst.capacity)) {
    throw std::invalid_argument("knapsack capacity must be finite and >= 0");
  }
  if (!(inst.quantum > 0.0)) throw std::invalid_argument("knapsack quantum must be > 0");
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (!(inst.weights[i] > 0.0) || !(inst.values[i] > 0.0)) {
      throw std::invalid_argument("knapsack item " + std::to_string(i) + " needs positive weight and value");
    }
  }
}

inline KnapsackSolution finish(const KnapsackInstance& inst, std::vector<bool> selected) {
  KnapsackSolution sol;
  sol.selected = std::move(selected);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (!sol.selected[i]) continue;
    sol.total_weight += inst.weights[i];
    sol.total_value += inst.values[i];
  }
  return sol;
}

// Smallest integer n with n * q >= w.
inline std::uint64_t units_up(double w, double q) {
  double n = std::ceil(w / q);
  if (n * q < w) n += 1.0;
  return static_cast<std::uint64_t>(n);
}

// Largest integer n with n * q <= w.
inline std::uint64_t units_down(double w, double q) {
  double n = std::floor(w / q);
  if (n > 0.0 && n * q > w) n -= 1.0;
  return static_cast<std::uint64_t>(n);
}

// Best value with total integer weight <= cap. Weights may be zero.
inline double dp_value_only(const std::vector<std::uint64_t>& w, const std::vector<double>& v, std::uint64_t cap) {
  std::vector<double> best(cap + 1, 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > cap) continue;
    for (std::uint64_t c = cap + 1; c-- > w[i];) {
      const double cand = best[c - w[i]] + v[i];
      if (cand > best[c]) best[c] = cand;
    }
  }
  return best[cap];
}

}  // namespace detail

// Exact DP over quantized weights. Weights round up to the quantum grid and
// the capacity rounds down, so any selection is feasible for the original
// instance. The table is indexed by exact quantized weight; among equal
// values the lightest weight wins.
//
// quantization_bound is the gap to a relaxed DP (weights rounded down), which
// is an upper bound on the true optimum.
inline KnapsackSolution solve_knapsack_dp(const KnapsackInstance& inst,
                                          std::size_t cell_budget = kDefaultDpCellBudget) {
  detail::check_instance(inst);
  const std::size_t n = inst.size();
  const double cap_units_real = std::floor(inst.capacity / inst.quantum);
  if (cap_units_real + 1.0 > static_cast<double>(cell_budget) ||
      (n > 0 && (cap_units_real + 1.0) * static_cast<double>(n) > static_cast<double>(cell_budget))) {
    throw KnapsackBudgetError("knapsack DP table exceeds cell budget; coarsen the quantum");
  }
  const std::uint64_t cap = detail::units_down(inst.capacity, inst.quantum);
  const std::size_t width = static_cast<std::size_t>(cap) + 1;

  std::vector<std::uint64_t> w_up(n), w_down(n);
  for (std::size_t i = 0; i < n; ++i) {
    w_up[i] = detail::units_up(inst.weights[i], inst.quantum);
    w_down[i] = detail::units_down(inst.weights[i], inst.quantum);
  }

  constexpr double kUnreachable = -std::numeric_limits<double>::infinity();
  std::vector<double> best(width, kUnreachable);
  best[0] = 0.0;
  std::vector<std::uint8_t> take(n * width, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t wi = w_up[i];
    if (wi > cap) continue;
    std::uint8_t* row = take.data() + i * width;
    for (std::size_t c = width; c-- > wi;) {
      const double from = best[c - wi];
      if (from == kUnreachable) continue;
      const double cand = from + inst.values[i];
      if (cand > best[c]) {
        best[c] = cand;
        row[c] = 1;
      }
    }
  }

  std::size_t at = 0;
  for (std::size_t c = 1; c < width; ++c) {
    if (best[c] > best[at]) at = c;
  }
  std::vector<bool> selected(n, false);
  for (std::size_t i = n; i-- > 0;) {
    if (take[i * width + at]) {
      selected[i] = true;
      at -= static_cast<std::size_t>(w_up[i]);
    }
  }

  KnapsackSolution sol = detail::finish(inst, std::move(selected));
  if (sol.total_weight > inst.capacity) throw std::logic_error("knapsack DP returned an over-capacity selection");
  const double relaxed = detail::dp_value_only(w_down, inst.values, cap);
  sol.quantization_bound = std::max(0.0, relaxed - sol.total_value);
  return sol;
}

// Enumerates every subset. Among equal values the lexicographically smallest
// selection vector (false < true, item 0 first) wins.
inline KnapsackSolution solve_knapsack_bruteforce(const KnapsackInstance& inst) {
  detail::check_instance(inst);
  const std::size_t n = inst.size();
  if (n > kMaxBruteForceItems) {
    throw std::invalid_argument("brute-force knapsack limited to " + std::to_string(kMaxBruteForceItems) + " items");
  }
  // Bit (n-1-i) of a code is item i, so numeric order of codes is the
  // lexicographic order of selection vectors.
  auto item_bit = [n](std::uint32_t code, std::size_t i) { return (code >> (n - 1 - i)) & 1u; };
  const std::uint32_t total = std::uint32_t{1} << n;
  std::uint32_t best_code = 0;
  double best_value = 0.0;
  for (std::uint32_t code = 1; code < total; ++code) {
    double weight = 0.0;
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!item_bit(code, i)) continue;
      weight += inst.weights[i];
      value += inst.values[i];
    }
    if (weight <= inst.capacity && value > best_value) {
      best_value = value;
      best_code = code;
    }
  }
  std::vector<bool> selected(n, false);
  for (std::size_t i = 0; i < n; ++i) selected[i] = item_bit(best_code, i) != 0;
  return detail::finish(inst, std::move(selected));
}

}  // namespace mecprice

#endif  // MECPRICE_KNAPSACK_HPP
