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

#ifndef MECPRICE_CHECKS_HPP
#define MECPRICE_CHECKS_HPP

// Randomized oracle and property suites. The acceptance test runs them at full
// size; `mecprice verify` runs them at whatever size is asked for.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mecprice/bench.hpp"
#include "mecprice/differentiated_pricing.hpp"
#include "mecprice/follower.hpp"
#include "mecprice/knapsack.hpp"
#include "mecprice/protocol.hpp"
#include "mecprice/scenario.hpp"
#include "mecprice/uniform_pricing.hpp"

namespace mecprice::checks {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

// Scenario with randomized size, capacity and device parameters on top of the
// default distributions, to reach corners the defaults rarely hit.
inline Scenario random_scenario(mecprice::detail::PortableStream& rng, std::size_t k_min, std::size_t k_max) {
  ScenarioConfig c;
  c.num_users = k_min + rng.index(k_max - k_min + 1);
  c.capacity_cycles = rng.uniform(5e8, 2e10);
  c.output_ratio = rng.uniform(0.05, 2.0);
  c.uplink_power_w = rng.uniform(0.01, 1.0);
  c.downlink_power_w = rng.uniform(0.1, 10.0);
  c.seed = static_cast<std::uint64_t>(rng.unit() * 9007199254740992.0);
  return sample_scenario(c);
}

// Exhaustive leader search used to cross-check the early-exit loop: every
// candidate is evaluated, infeasible ones score zero, revenue ties keep the
// higher price.
inline PriceOutcome exhaustive_uniform(const Scenario& s, const std::vector<UserKinetics>& kin) {
  std::vector<PriceOutcome> all;
  for (double p : candidate_prices(s)) all.push_back(evaluate_price(s, kin, p));
  const PriceOutcome* best = nullptr;
  for (const auto& o : all) {
    if (!o.feasible || o.revenue_s <= 0.0) continue;
    if (!best || o.revenue_s > best->revenue_s || (o.revenue_s == best->revenue_s && o.prices[0] > best->prices[0])) {
      best = &o;
    }
  }
  return best ? *best : no_offload_outcome(s, kin);
}

// Nondecreasing (or nonincreasing) up to one adjacent-pair violation of at
// most `slack` relative to the earlier value.
inline bool monotone_with_allowance(const std::vector<double>& v, bool increasing, double slack, std::string& why) {
  std::size_t violations = 0;
  bool small = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double step = increasing ? v[i] - v[i - 1] : v[i - 1] - v[i];
    if (step < 0.0) {
      ++violations;
      if (-step > slack * std::abs(v[i - 1])) small = false;
      why += " violation at index " + std::to_string(i) + ";";
    }
  }
  return violations == 0 || (violations == 1 && small);
}

inline std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(6);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace detail

// Best response versus a brute-force grid minimization of the cost.
inline CheckResult follower_oracle(std::size_t pairs, std::size_t grid_points, std::uint64_t seed) {
  detail::Timer timer;
  CheckResult r{"follower best response matches grid oracle"};
  mecprice::detail::PortableStream rng(seed);
  for (std::size_t i = 0; i < pairs && r.passed; ++i) {
    const Scenario s = detail::random_scenario(rng, 1, 4);
    const std::size_t k = rng.index(s.users.size());
    const UserProfile& u = s.users[k];
    const UserKinetics kin = compute_kinetics(s.system, u);
    const double threshold = offload_threshold(u);
    double price = 0.0;
    switch (rng.index(4)) {
      case 0:
        price = threshold;
        break;
      case 1:
        price = 0.0;
        break;
      default:
        price = rng.uniform(0.0, 2.0 * threshold);
    }
    const OffloadDecision d = best_response(kin, u, price, k);
    const double oracle_ell = best_response_oracle(kin, u, price, grid_points);
    const double oracle_cost = user_cost(kin, u, oracle_ell, price);
    if (d.cost_s > oracle_cost + 1e-9 * (1.0 + std::abs(oracle_cost))) {
      r.passed = false;
      r.detail = "pair " + std::to_string(i) + ": best response cost exceeds oracle cost";
    }
    if (d.offloaded_bits != 0.0 && d.offloaded_bits != kin.balance_bits) {
      r.passed = false;
      r.detail = "pair " + std::to_string(i) + ": offload outside {0, m_k}";
    }
    if ((price < threshold && d.offloaded_bits != kin.balance_bits) ||
        (price > threshold && d.offloaded_bits != 0.0)) {
      r.passed = false;
      r.detail = "pair " + std::to_string(i) + ": threshold case structure broken";
    }
  }
  if (r.passed) r.detail = std::to_string(pairs) + " pairs, grid " + std::to_string(grid_points);
  r.seconds = timer.seconds();
  return r;
}

// No price on a dense grid earns more than the candidate-set optimum.
inline CheckResult uniform_price_grid(std::size_t scenarios, std::size_t k_max, std::size_t grid_points,
                                      std::uint64_t seed) {
  detail::Timer timer;
  CheckResult r{"uniform optimum dominates dense price grid"};
  mecprice::detail::PortableStream rng(seed);
  for (std::size_t i = 0; i < scenarios && r.passed; ++i) {
    const Scenario s = detail::random_scenario(rng, 1, k_max);
    const auto kin = compute_all_kinetics(s);
    const PriceOutcome best = solve_uniform(s, kin);
    const double top = 2.0 * candidate_prices(s).back();
    for (std::size_t g = 1; g <= grid_points; ++g) {
      const double p = top * static_cast<double>(g) / static_cast<double>(grid_points);
      const double rev = evaluate_price(s, kin, p).revenue_s;
      if (rev > best.revenue_s * (1.0 + 1e-9)) {
        r.passed = false;
        r.detail = "scenario " + std::to_string(i) + ": grid price beats solve_uniform";
        break;
      }
    }
  }
  if (r.passed) r.detail = std::to_string(scenarios) + " scenarios, K <= " + std::to_string(k_max);
  r.seconds = timer.seconds();
  return r;
}

// Early-exit loop == exhaustive search, and the message-level replay ends on
// the same outcome field for field.
inline CheckResult bargaining_equivalence(std::size_t scenarios, std::uint64_t seed) {
  detail::Timer timer;
  CheckResult r{"early-exit bargaining equals exhaustive search and protocol replay"};
  mecprice::detail::PortableStream rng(seed);
  for (std::size_t i = 0; i < scenarios && r.passed; ++i) {
    const Scenario s = detail::random_scenario(rng, 1, 50);
    const auto kin = compute_all_kinetics(s);
    const PriceOutcome fast = solve_uniform(s, kin);
    if (!(fast == detail::exhaustive_uniform(s, kin))) {
      r.passed = false;
      r.detail = "scenario " + std::to_string(i) + ": early exit differs from exhaustive";
    }
    const protocol::BargainTrace trace = protocol::run_bargaining(s, kin);
    if (!(trace.final == fast)) {
      r.passed = false;
      r.detail = "scenario " + std::to_string(i) + ": protocol final differs from solve_uniform";
    }
    if (!protocol::information_audit(trace).clean()) {
      r.passed = false;
      r.detail = "scenario " + std::to_string(i) + ": information audit flagged the trace";
    }
  }
  if (r.passed) r.detail = std::to_string(scenarios) + " scenarios";
  r.seconds = timer.seconds();
  return r;
}

// DP against 2^K enumeration, on-grid (exact) and off-grid (bounded).
inline CheckResult knapsack_exactness(std::size_t instances, std::uint64_t seed) {
  detail::Timer timer;
  CheckResult r{"knapsack DP matches brute force"};
  mecprice::detail::PortableStream rng(seed);
  const double q = 1e6;
  double max_bound = 0.0;
  for (std::size_t i = 0; i < instances && r.passed; ++i) {
    const std::size_t n = 1 + rng.index(kMaxBruteForceItems);
    const bool on_grid = i % 2 == 0;
    KnapsackInstance inst;
    inst.quantum = q;
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = on_grid ? q * static_cast<double>(1 + rng.index(3000)) : rng.uniform(1e8, 3e9);
      inst.weights.push_back(w);
      inst.values.push_back(w * rng.uniform(1e-9, 1e-8));
      total += w;
    }
    inst.capacity = rng.uniform(0.0, total);
    const KnapsackSolution dp = solve_knapsack_dp(inst);
    const KnapsackSolution bf = solve_knapsack_bruteforce(inst);
    const std::string at = "instance " + std::to_string(i) + " (K=" + std::to_string(n) + "): ";
    if (dp.total_weight > inst.capacity || bf.total_weight > inst.capacity) {
      r.passed = false;
      r.detail = at + "selection over capacity";
    } else if (on_grid && dp.total_value != bf.total_value) {
      r.passed = false;
      r.detail = at + "on-grid DP value differs from brute force";
    } else if (!on_grid && dp.total_value < bf.total_value - dp.quantization_bound - 1e-12 * bf.total_value) {
      r.passed = false;
      r.detail = at + "DP value below brute force minus quantization bound";
    }
    max_bound = std::max(max_bound, dp.quantization_bound);
  }
  if (r.passed) r.detail = std::to_string(instances) + " instances, max off-grid bound " + std::to_string(max_bound);
  r.seconds = timer.seconds();
  return r;
}

inline CheckResult revenue_dominance(std::size_t scenarios, std::uint64_t seed) {
  detail::Timer timer;
  CheckResult r{"differentiated revenue >= uniform revenue"};
  mecprice::detail::PortableStream rng(seed);
  double min_gain = INFINITY;
  for (std::size_t i = 0; i < scenarios && r.passed; ++i) {
    const Scenario s = detail::random_scenario(rng, 1, 50);
    const auto kin = compute_all_kinetics(s);
    const double uni = solve_uniform(s, kin).revenue_s;
    const double diff = solve_differentiated(s, kin).revenue_s;
    if (diff < uni - 1e-12 * std::abs(uni)) {
      r.passed = false;
      r.detail = "scenario " + std::to_string(i) + ": differentiated " + std::to_string(diff) + " < uniform " +
                 std::to_string(uni);
    }
    min_gain = std::min(min_gain, diff - uni);
  }
  if (r.passed) r.detail = std::to_string(scenarios) + " scenarios, min(diff - uni) = " + std::to_string(min_gain);
  r.seconds = timer.seconds();
  return r;
}

// Continuity at m_k, cost = latency + payment, local time == offload time at m_k.
inline CheckResult cost_model(std::size_t users, std::uint64_t seed) {
  detail::Timer timer;
  CheckResult r{"cost model continuity, decomposition and balance point"};
  mecprice::detail::PortableStream rng(seed);
  constexpr double kTol = 1e-9;
  std::size_t done = 0;
  while (done < users && r.passed) {
    const Scenario s = detail::random_scenario(rng, 1, 50);
    for (std::size_t k = 0; k < s.users.size() && done < users && r.passed; ++k, ++done) {
      const UserProfile& u = s.users[k];
      const UserKinetics kin = compute_kinetics(s.system, u);
      const double m = kin.balance_bits;
      const double price = rng.uniform(0.0, 2.0 * offload_threshold(u));
      const double first = (price - 1.0 / u.local_cpu_cps) * m * u.cycles_per_bit +
                           u.data_bits * u.cycles_per_bit / u.local_cpu_cps;
      const double second = kin.beta_s_per_bit * m + price * m * u.cycles_per_bit;
      if (!detail::close_rel(first, second, kTol)) {
        r.passed = false;
        r.detail = "user " + std::to_string(done) + ": branches disagree at m_k";
      }
      for (double ell : {rng.uniform(0.0, m), m, rng.uniform(m, u.data_bits)}) {
        const double lhs = user_cost(kin, u, ell, price);
        const double rhs = task_latency(kin, u, ell) + price * ell * u.cycles_per_bit;
        if (!detail::close_rel(lhs, rhs, kTol)) {
          r.passed = false;
          r.detail = "user " + std::to_string(done) + ": cost != latency + payment";
        }
      }
      if (!detail::close_rel(local_time(u, m), offload_time(kin, u, m), kTol)) {
        r.passed = false;
        r.detail = "user " + std::to_string(done) + ": local time != offload time at m_k";
      }
    }
  }
  if (r.passed) r.detail = std::to_string(users) + " users";
  r.seconds = timer.seconds();
  return r;
}

struct TrendReport {
  std::vector<CheckResult> checks;
  std::vector<TrialResult> capacity_results;
  std::vector<TrialResult> users_results;
};

inline std::vector<double> latencies(const std::vector<PointSummary>& p) {
  std::vector<double> v;
  for (const auto& x : p) v.push_back(x.mean_latency_s);
  return v;
}

inline std::vector<double> revenues(const std::vector<PointSummary>& p) {
  std::vector<double> v;
  for (const auto& x : p) v.push_back(x.mean_revenue_s);
  return v;
}

// Capacity sweep and user-count sweep with the default distributions.
inline TrendReport performance_trends(std::size_t trials, std::uint64_t seed) {
  detail::Timer timer;
  TrendReport rep;
  constexpr double kSlack = 0.01;

  SweepSpec cap;
  cap.param = SweepParam::Capacity;
  cap.values = {2e9, 4e9, 6e9, 8e9, 10e9, 12e9};
  cap.trials = trials;
  cap.base.num_users = 30;
  cap.base.seed = seed;
  rep.capacity_results = run_sweep(cap);

  SweepSpec users;
  users.param = SweepParam::NumUsers;
  users.values = {10, 20, 30, 40, 50};
  users.trials = trials;
  users.base.capacity_cycles = 6e9;
  users.base.seed = seed;
  rep.users_results = run_sweep(users);

  for (Scheme scheme : {Scheme::Uniform, Scheme::Differentiated}) {
    const std::string name = to_string(scheme);
    const auto pc = summarize(rep.capacity_results, scheme);
    const auto pk = summarize(rep.users_results, scheme);
    struct Trend {
      std::string label;
      std::vector<double> series;
      bool increasing;
    };
    const Trend trends[] = {
        {name + " revenue nondecreasing in capacity", revenues(pc), true},
        {name + " latency nonincreasing in capacity", latencies(pc), false},
        {name + " revenue nondecreasing in user count", revenues(pk), true},
        {name + " latency nondecreasing in user count", latencies(pk), true},
    };
    for (const auto& t : trends) {
      CheckResult c{t.label};
      std::string why;
      c.passed = detail::monotone_with_allowance(t.series, t.increasing, kSlack, why);
      c.detail = "means: " + detail::join(t.series) + (why.empty() ? "" : " |" + why);
      rep.checks.push_back(c);
    }
  }

  // Per trial: nobody does worse than computing everything locally.
  {
    CheckResult c{"local-only latency is the worst, every trial"};
    std::size_t n = 0;
    for (const auto* results : {&rep.capacity_results, &rep.users_results}) {
      for (std::size_t i = 0; i + 2 < results->size(); i += 3) {
        const auto& uni = (*results)[i];
        const auto& diff = (*results)[i + 1];
        const auto& local = (*results)[i + 2];
        ++n;
        if (!(local.avg_latency_s >= uni.avg_latency_s && local.avg_latency_s >= diff.avg_latency_s)) {
          c.passed = false;
          c.detail = "seed " + std::to_string(local.seed) + ": a pricing scheme is slower than local-only";
        }
      }
    }
    if (c.passed) c.detail = std::to_string(n) + " trials";
    rep.checks.push_back(c);
  }

  // Local-only does not depend on the capacity: re-evaluating every capacity
  // trial's scenario at every swept capacity gives bitwise-equal latency.
  {
    CheckResult c{"local-only latency independent of capacity"};
    for (std::size_t p = 0; p < cap.values.size() && c.passed; ++p) {
      for (std::size_t t = 0; t < cap.trials && c.passed; ++t) {
        Scenario s = sample_scenario(sweep_point_config(cap, p, t));
        const auto kin = compute_all_kinetics(s);
        const double ref = run_trial(s, kin, Scheme::LocalOnly).avg_latency_s;
        for (double v : cap.values) {
          s.system.cloud_capacity_cycles = v;
          if (run_trial(s, kin, Scheme::LocalOnly).avg_latency_s != ref) {
            c.passed = false;
            c.detail = "capacity changed local-only latency";
          }
        }
      }
    }
    if (c.passed) c.detail = "all capacity trials";
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"mean latency: uniform >= differentiated at >= 95% of capacity points"};
    const auto uni = summarize(rep.capacity_results, Scheme::Uniform);
    const auto diff = summarize(rep.capacity_results, Scheme::Differentiated);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < uni.size(); ++i) {
      if (uni[i].mean_latency_s >= diff[i].mean_latency_s) ++ok;
    }
    c.passed = static_cast<double>(ok) >= 0.95 * static_cast<double>(uni.size());
    c.detail = std::to_string(ok) + "/" + std::to_string(uni.size()) + " points; uniform " +
               detail::join(latencies(uni)) + " vs differentiated " + detail::join(latencies(diff));
    rep.checks.push_back(c);
  }

  const double secs = timer.seconds();
  for (auto& c : rep.checks) c.seconds = secs;
  return rep;
}

}  // namespace mecprice::checks

#endif  // MECPRICE_CHECKS_HPP
