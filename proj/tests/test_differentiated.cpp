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

#include <gtest/gtest.h>

#include "mecprice/differentiated_pricing.hpp"
#include "mecprice/uniform_pricing.hpp"
#include "test_util.hpp"

namespace mecprice {
namespace {

using testing::near_rel;
using testing::two_user_instance;

TEST(BuildKnapsack, WeightsAndValues) {
  const auto h = two_user_instance();
  const KnapsackInstance inst = build_knapsack(h.scenario, h.kinetics);
  ASSERT_EQ(inst.size(), 2u);
  EXPECT_TRUE(near_rel(inst.weights[0], 4e8, 1e-12));
  EXPECT_TRUE(near_rel(inst.weights[1], 3e8, 1e-12));
  EXPECT_TRUE(near_rel(inst.values[0], 0.4, 1e-12));
  EXPECT_TRUE(near_rel(inst.values[1], 0.6, 1e-12));
  EXPECT_EQ(inst.capacity, 1e9);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_TRUE(near_rel(inst.values[k] / inst.weights[k], 1.0 / h.scenario.users[k].local_cpu_cps, 1e-12));
  }
}

TEST(SolveDifferentiated, HandInstance) {
  const auto h = two_user_instance();
  const PriceOutcome o = solve_differentiated(h.scenario, h.kinetics);
  EXPECT_EQ(o.prices[0], 1.0 / 1e9);
  EXPECT_EQ(o.prices[1], 1.0 / 0.5e9);
  EXPECT_TRUE(near_rel(o.revenue_s, 1.0, 1e-12));
  EXPECT_TRUE(o.feasible);

  const auto tight = two_user_instance(5e8);
  const PriceOutcome t = solve_differentiated(tight.scenario, tight.kinetics);
  EXPECT_TRUE(is_no_offload_price(t.prices[0]));
  EXPECT_EQ(t.prices[1], 1.0 / 0.5e9);
  EXPECT_TRUE(near_rel(t.revenue_s, 0.6, 1e-12));
}

TEST(SolveDifferentiated, ZeroCapacity) {
  const auto h = two_user_instance(0.0);
  const PriceOutcome o = solve_differentiated(h.scenario, h.kinetics);
  EXPECT_TRUE(o.offloads_nothing());
  for (double p : o.prices) EXPECT_TRUE(is_no_offload_price(p));
  EXPECT_EQ(o.revenue_s, 0.0);
}

TEST(SolveDifferentiated, AgreesWithFollowers) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Scenario s = testing::default_scenario(seed);
    const auto kin = compute_all_kinetics(s);
    const auto r = solve_differentiated_detailed(s, kin);
    for (std::size_t k = 0; k < s.users.size(); ++k) {
      const OffloadDecision d = best_response(kin[k], s.users[k], r.outcome.prices[k], k);
      EXPECT_EQ(d.offload_flag, bool(r.knapsack.selected[k]));
      EXPECT_EQ(d.offloaded_bits, r.outcome.decisions[k].offloaded_bits);
    }
    EXPECT_LE(r.outcome.total_load_cycles, s.system.cloud_capacity_cycles);
  }
}

TEST(SolveDifferentiated, DominatesUniform) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ScenarioConfig c;
    c.seed = seed;
    c.capacity_cycles = 1e9 + 2e8 * static_cast<double>(seed % 50);
    const Scenario s = sample_scenario(c);
    const auto kin = compute_all_kinetics(s);
    EXPECT_GE(solve_differentiated(s, kin).revenue_s, solve_uniform(s, kin).revenue_s) << "seed " << seed;
  }
}

TEST(SolveDifferentiated, ExactModeMatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Scenario s = testing::default_scenario(seed, 12);
    const auto kin = compute_all_kinetics(s);
    DifferentiatedOptions opt;
    opt.exact_small = true;
    const auto exact = solve_differentiated_detailed(s, kin, opt);
    const auto bf = solve_knapsack_bruteforce(build_knapsack(s, kin));
    EXPECT_EQ(exact.knapsack.total_value, bf.total_value);
    const auto dp = solve_differentiated_detailed(s, kin);
    EXPECT_GE(dp.knapsack.total_value + dp.knapsack.quantization_bound, bf.total_value * (1.0 - 1e-12));
  }
}

}  // namespace
}  // namespace mecprice
